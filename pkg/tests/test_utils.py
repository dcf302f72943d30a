"""Tests for tensegrity-strata utilities."""

from fractions import Fraction

from tensegrity_strata.utils import edge_label, format_rational, format_vector, text_digest


class TestFormatRational:
    """Tests for format_rational function."""

    def test_integer(self):
        """Whole values print without a denominator."""
        assert format_rational(Fraction(6, 2)) == "3"
        assert format_rational(-4) == "-4"

    def test_fraction(self):
        """Proper fractions print as p/q in lowest terms."""
        assert format_rational(Fraction(-2, 6)) == "-1/3"


class TestFormatVector:
    """Tests for format_vector function."""

    def test_mixed(self):
        """Entries are comma separated."""
        assert format_vector([Fraction(1), Fraction(-1, 2), 0]) == "(1, -1/2, 0)"

    def test_empty(self):
        assert format_vector([]) == "()"


class TestEdgeLabel:
    """Tests for edge_label function."""

    def test_label(self):
        """Edges print as i-j."""
        assert edge_label((2, 5)) == "2-5"


class TestTextDigest:
    """Tests for text_digest function."""

    def test_same_text_same_digest(self):
        """Digests are deterministic."""
        assert text_digest("+00") == text_digest("+00")

    def test_different_texts_differ(self):
        """Different texts should produce different digests."""
        assert text_digest("+00") != text_digest("-00")

    def test_hex_length(self):
        """SHA-256 gives 64 hex characters."""
        assert len(text_digest("")) == 64
