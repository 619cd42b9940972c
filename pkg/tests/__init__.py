"""Unit test package for faddeyeva-voigt."""
