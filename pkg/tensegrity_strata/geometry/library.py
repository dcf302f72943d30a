"""Named condition systems that force self-stresses on small plane graphs."""

from __future__ import annotations

from .conditions import AuxDefinition, Collinear, ConditionSystem


def pascal_system(
    name: str,
    points: tuple[int, int, int, int, int, int],
    base_count: int,
    leading: tuple[AuxDefinition, ...] = (),
    description: str = "",
) -> ConditionSystem:
    """Six points on a conic, via Pascal's line.

    With the points ``c1..c6`` the auxiliaries are ``[c1,c2;c4,c5]``,
    ``[c2,c3;c5,c6]`` and ``[c3,c4;c1,c6]``, which must be collinear.
    """
    c1, c2, c3, c4, c5, c6 = points
    first = base_count + len(leading) + 1
    return ConditionSystem(
        name=name,
        base_count=base_count,
        auxiliaries=leading
        + (
            AuxDefinition(c1, c2, c4, c5, name=f"q{first}"),
            AuxDefinition(c2, c3, c5, c6, name=f"q{first + 1}"),
            AuxDefinition(c3, c4, c1, c6, name=f"q{first + 2}"),
        ),
        conditions=(Collinear(first, first + 1, first + 2),),
        kind="conic",
        description=description,
        conic_points=points,
    )


CONCURRENT_12_34_56 = ConditionSystem(
    name="concurrent_12_34_56",
    base_count=6,
    auxiliaries=(AuxDefinition(1, 2, 3, 4, name="q7"),),
    conditions=(Collinear(7, 5, 6),),
    kind="concurrency",
    description="lines v1v2, v3v4 and v5v6 have a common point",
)

CONIC_123456 = pascal_system(
    "conic_123456",
    (1, 2, 3, 4, 5, 6),
    base_count=6,
    description="v1..v6 lie on a conic",
)

COLLINEAR_145 = ConditionSystem(
    name="collinear_145",
    base_count=5,
    conditions=(Collinear(1, 4, 5),),
    kind="collinear",
    description="v1, v4 and v5 lie on a line",
)

COLLINEAR_236 = ConditionSystem(
    name="collinear_236",
    base_count=6,
    conditions=(Collinear(2, 3, 6),),
    kind="collinear",
    description="v2, v3 and v6 lie on a line",
)

COLLINEAR_123 = ConditionSystem(
    name="collinear_123",
    base_count=3,
    conditions=(Collinear(1, 2, 3),),
    kind="collinear",
    description="v1, v2 and v3 lie on a line",
)

CONCURRENT_12_34_5P = ConditionSystem(
    name="concurrent_12_34_5p",
    base_count=7,
    auxiliaries=(
        AuxDefinition(2, 6, 3, 7, name="p"),
        AuxDefinition(1, 2, 3, 4, name="q9"),
    ),
    conditions=(Collinear(9, 5, 8),),
    kind="concurrency",
    description="lines v1v2, v3v4 and v5p have a common point, p=[v2,v6;v3,v7]",
)

CONIC_12345P = pascal_system(
    "conic_12345p",
    (1, 2, 3, 4, 5, 8),
    base_count=7,
    leading=(AuxDefinition(1, 6, 3, 7, name="p"),),
    description="v1..v5 and p lie on a conic, p=[v1,v6;v3,v7]",
)

# search order for witnesses: concurrency, then conics, then collinear triples
CONDITION_LIBRARY: tuple[ConditionSystem, ...] = (
    CONCURRENT_12_34_56,
    CONIC_123456,
    COLLINEAR_145,
    COLLINEAR_236,
    COLLINEAR_123,
    CONCURRENT_12_34_5P,
    CONIC_12345P,
)


def library_system(name: str) -> ConditionSystem:
    for system in CONDITION_LIBRARY:
        if system.name == name:
            return system
    raise KeyError(name)
