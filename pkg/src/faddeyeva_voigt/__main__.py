# Faddeyeva function and Voigt functions by truncated exponential series
# module entry for python -m faddeyeva_voigt

from faddeyeva_voigt.cli import main



raise SystemExit(main())
