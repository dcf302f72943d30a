"""tensegrity-strata: exact self-stresses, strata and tensegrity characteristics.

This package provides a command-line workbench and the library behind it.
All arithmetic is exact over the rationals.

Quick Start (Library):
    ```python
    from tensegrity_strata import Configuration, Framework, Graph
    from tensegrity_strata.analysis import self_stress_space, fingerprint

    graph = Graph.complete(4)
    config = Configuration.from_values(2, [[0, 0], [1, 0], [2, 2], [0, 1]])
    space = self_stress_space(Framework(graph, config))
    print(space.dim, fingerprint(space.framework).canonical())
    ```

Quick Start (CLI):
    ```
    tensegrity-strata stress example.json
    tensegrity-strata tc k33.json --dim 2
    tensegrity-strata catalog verify k33_conic
    ```
"""

__version__ = "0.1.0"

from .config import Config
from .exceptions import (
    ConfigError,
    DimensionError,
    GeneralPositionError,
    GeometryError,
    GraphError,
    InputError,
    NotConstructibleError,
    NotSelfStressError,
    ParseError,
    PreconditionError,
    TensegrityError,
)
from .models import Configuration, Fingerprint, Framework, Graph, SignMatrix, Stress, Tensegrity

__all__ = [
    # Models
    "Graph",
    "Configuration",
    "Framework",
    "Stress",
    "Tensegrity",
    "SignMatrix",
    "Fingerprint",
    # Configuration
    "Config",
    # Exceptions
    "TensegrityError",
    "ConfigError",
    "InputError",
    "ParseError",
    "GraphError",
    "DimensionError",
    "GeneralPositionError",
    "NotSelfStressError",
    "PreconditionError",
    "GeometryError",
    "NotConstructibleError",
    # Version
    "__version__",
]
