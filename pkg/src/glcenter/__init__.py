"""Exact symbolic computation in the center of the enveloping algebra U(gl(n)).

The package builds central elements (Capelli determinantal generators,
Nazarov-Umeda permanental generators, Schur elements / quantum immanants)
through a virtual superalgebra presentation, computes their eigenvalues on
highest weight vectors, and maps them to shifted symmetric polynomials.
All arithmetic is exact rational.
"""

__version__ = "0.1.0"
