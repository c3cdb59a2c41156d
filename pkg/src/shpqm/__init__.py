"""Numerical toolkit for relativistic quantum mechanics with a universal
invariant evolution parameter: Lorentz/SL(2,C) algebra, spin representations
induced on a timelike foliation vector, covariant Dirac operators, spin
coupling on a common fiber, free Stueckelberg-type evolution, and a
two-electron unequal-time interference simulator."""

__version__ = "0.1.0"
