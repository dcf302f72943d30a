"""Tests for tensegrity-strata."""
