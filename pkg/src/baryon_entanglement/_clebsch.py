"""Clebsch-Gordan content of 8x8 two-baryon states with definite (Q, S).

Each state is a tuple of terms ``(F1, F2, "±m/n")`` meaning the coefficient
``±sqrt(m/n)`` multiplying the symmetrized (symmetric irreps) or
antisymmetrized (antisymmetric irreps) pair state ``|F1 F2>``.  For identical
flavors the term is the single product state ``|F F>``.

Phase convention: all octet fields enter the 3x3 baryon matrix with unit
coefficients, so every entry here is a simultaneous eigenvector of the
two-baryon Casimir operators built from ``su3_algebra.octet_generators``.
"""

from __future__ import annotations

CLEBSCH: dict[str, tuple] = {
    "27": (
        (("n", "n", "+1"),),
        (("n", "p", "+1"),),
        (("p", "p", "+1"),),
        (("n", "Sigma-", "+1"),),
        (("Sigma0", "n", "+2/3"), ("Sigma-", "p", "+1/3"),),
        (("Sigma0", "n", "-1/30"), ("Sigma-", "p", "+1/15"), ("Lambda", "n", "+9/10"),),
        (("Sigma+", "n", "-1/3"), ("Sigma0", "p", "+2/3"),),
        (("Sigma+", "n", "+1/15"), ("Sigma0", "p", "+1/30"), ("Lambda", "p", "+9/10"),),
        (("Sigma+", "p", "+1"),),
        (("Sigma+", "Sigma-", "+1/3"), ("Sigma0", "Sigma0", "-2/3"),),
        (("Lambda", "Sigma0", "-3/5"), ("Xi-", "p", "+1/5"), ("Xi0", "n", "-1/5"),),
        (("Sigma+", "Sigma-", "+1/60"), ("Sigma0", "Sigma0", "+1/120"), ("Xi0", "n", "-3/20"), ("Xi-", "p", "-3/20"), ("Lambda", "Lambda", "+27/40"),),
        (("Sigma-", "Sigma-", "+1"),),
        (("Sigma-", "Sigma0", "+1"),),
        (("Lambda", "Sigma-", "+3/5"), ("Xi-", "n", "-2/5"),),
        (("Lambda", "Sigma+", "+3/5"), ("Xi0", "p", "-2/5"),),
        (("Sigma+", "Sigma0", "+1"),),
        (("Sigma+", "Sigma+", "+1"),),
        (("Sigma-", "Xi-", "+1"),),
        (("Sigma0", "Xi-", "-2/3"), ("Sigma-", "Xi0", "+1/3"),),
        (("Sigma0", "Xi-", "+1/30"), ("Sigma-", "Xi0", "+1/15"), ("Lambda", "Xi-", "+9/10"),),
        (("Sigma+", "Xi-", "+1/3"), ("Sigma0", "Xi0", "+2/3"),),
        (("Sigma+", "Xi-", "-1/15"), ("Sigma0", "Xi0", "+1/30"), ("Lambda", "Xi0", "-9/10"),),
        (("Sigma+", "Xi0", "+1"),),
        (("Xi-", "Xi-", "+1"),),
        (("Xi-", "Xi0", "+1"),),
        (("Xi0", "Xi0", "+1"),),
    ),
    "8S": (
        (("Sigma0", "n", "+3/10"), ("Sigma-", "p", "-3/5"), ("Lambda", "n", "+1/10"),),
        (("Sigma+", "n", "+3/5"), ("Sigma0", "p", "+3/10"), ("Lambda", "p", "-1/10"),),
        (("Lambda", "Sigma0", "+2/5"), ("Xi-", "p", "+3/10"), ("Xi0", "n", "-3/10"),),
        (("Sigma+", "Sigma-", "-2/5"), ("Sigma0", "Sigma0", "-1/5"), ("Xi0", "n", "+1/10"), ("Xi-", "p", "+1/10"), ("Lambda", "Lambda", "+1/5"),),
        (("Lambda", "Sigma-", "+2/5"), ("Xi-", "n", "+3/5"),),
        (("Lambda", "Sigma+", "+2/5"), ("Xi0", "p", "+3/5"),),
        (("Sigma0", "Xi-", "+3/10"), ("Sigma-", "Xi0", "+3/5"), ("Lambda", "Xi-", "-1/10"),),
        (("Sigma+", "Xi-", "+3/5"), ("Sigma0", "Xi0", "-3/10"), ("Lambda", "Xi0", "-1/10"),),
    ),
    "1": (
        (("Sigma+", "Sigma-", "+1/4"), ("Sigma0", "Sigma0", "+1/8"), ("Xi0", "n", "+1/4"), ("Xi-", "p", "+1/4"), ("Lambda", "Lambda", "+1/8"),),
    ),
    "10": (
        (("n", "Sigma-", "+1"),),
        (("Sigma0", "n", "+2/3"), ("Sigma-", "p", "+1/3"),),
        (("Sigma+", "n", "-1/3"), ("Sigma0", "p", "+2/3"),),
        (("Sigma+", "p", "+1"),),
        (("Lambda", "Sigma-", "+1/2"), ("Sigma-", "Sigma0", "+1/6"), ("Xi-", "n", "+1/3"),),
        (("Lambda", "Sigma+", "+1/2"), ("Sigma+", "Sigma0", "-1/6"), ("Xi0", "p", "+1/3"),),
        (("Sigma0", "Xi-", "+1/6"), ("Sigma-", "Xi0", "+1/3"), ("Lambda", "Xi-", "-1/2"),),
        (("Sigma+", "Xi-", "-1/3"), ("Sigma0", "Xi0", "+1/6"), ("Lambda", "Xi0", "+1/2"),),
        (("Xi-", "Xi0", "+1"),),
        (("Xi0", "n", "-1/6"), ("Xi-", "p", "+1/6"), ("Sigma+", "Sigma-", "+1/6"), ("Lambda", "Sigma0", "+1/2"),),
    ),
    "10bar": (
        (("n", "p", "+1"),),
        (("Sigma0", "n", "-1/6"), ("Sigma-", "p", "+1/3"), ("Lambda", "n", "-1/2"),),
        (("Sigma+", "n", "+1/3"), ("Sigma0", "p", "+1/6"), ("Lambda", "p", "-1/2"),),
        (("Lambda", "Sigma-", "+1/2"), ("Sigma-", "Sigma0", "-1/6"), ("Xi-", "n", "-1/3"),),
        (("Lambda", "Sigma+", "+1/2"), ("Sigma+", "Sigma0", "+1/6"), ("Xi0", "p", "-1/3"),),
        (("Sigma-", "Xi-", "+1"),),
        (("Sigma0", "Xi-", "-2/3"), ("Sigma-", "Xi0", "+1/3"),),
        (("Sigma+", "Xi-", "+1/3"), ("Sigma0", "Xi0", "+2/3"),),
        (("Sigma+", "Xi0", "+1"),),
        (("Xi0", "n", "-1/6"), ("Xi-", "p", "+1/6"), ("Sigma+", "Sigma-", "+1/6"), ("Lambda", "Sigma0", "-1/2"),),
    ),
    "8A": (
        (("Sigma0", "n", "-1/6"), ("Sigma-", "p", "+1/3"), ("Lambda", "n", "+1/2"),),
        (("Sigma+", "n", "+1/3"), ("Sigma0", "p", "+1/6"), ("Lambda", "p", "+1/2"),),
        (("Sigma-", "Sigma0", "-2/3"), ("Xi-", "n", "+1/3"),),
        (("Xi0", "n", "+1/2"), ("Xi-", "p", "+1/2"),),
        (("Xi0", "n", "-1/6"), ("Xi-", "p", "+1/6"), ("Sigma-", "Sigma+", "+2/3"),),
        (("Sigma+", "Sigma0", "+2/3"), ("Xi0", "p", "+1/3"),),
        (("Sigma0", "Xi-", "+1/6"), ("Sigma-", "Xi0", "+1/3"), ("Lambda", "Xi-", "+1/2"),),
        (("Sigma+", "Xi-", "-1/3"), ("Sigma0", "Xi0", "+1/6"), ("Lambda", "Xi0", "-1/2"),),
    ),
}

# Entries of the commonly reproduced listing that do not survive Casimir
# verification in this phase convention: (irrep, 1-based row, terms as listed).
# The replacements live in CLEBSCH at the same row.  Two additional states,
# the (Q, S) = (0, -2) members of 10 and 10bar, are absent from that listing
# and appear as the last row of their irrep above.
LISTED_ERRATA: tuple = (
    ("27", 11, (("Lambda", "Sigma0", "+3/5"), ("Xi-", "p", "+1/5"), ("Xi0", "n", "-1/5"),)),
    ("27", 12, (("Sigma+", "Sigma-", "+1/60"), ("Sigma0", "Sigma0", "-1/120"), ("Xi0", "n", "-3/20"), ("Xi-", "p", "-3/20"), ("Lambda", "Lambda", "+27/40"),)),
    ("27", 21, (("Sigma0", "Xi-", "-1/30"), ("Sigma-", "Xi0", "+1/15"), ("Lambda", "Xi-", "+9/10"),)),
    ("27", 23, (("Sigma+", "Xi-", "-1/15"), ("Sigma0", "Xi0", "+1/30"), ("Lambda", "Xi0", "+9/10"),)),
    ("8S", 3, (("Lambda", "Sigma0", "-2/5"), ("Xi-", "p", "+3/10"), ("Xi0", "n", "-3/10"),)),
    ("8S", 4, (("Sigma+", "Sigma-", "+2/5"), ("Sigma0", "Sigma0", "-1/5"), ("Xi0", "n", "+1/10"), ("Xi-", "p", "+1/10"), ("Lambda", "Lambda", "+1/5"),)),
    ("8S", 8, (("Sigma+", "Xi-", "+3/5"), ("Sigma0", "Xi0", "-3/10"), ("Lambda", "Xi0", "+1/10"),)),
    ("10bar", 2, (("Sigma0", "n", "-1/6"), ("Sigma-", "p", "+1/2"), ("Lambda", "n", "+1/2"),)),
    ("10bar", 5, (("Lambda", "Sigma+", "+1/2"), ("Sigma+", "Sigma0", "-1/6"), ("Xi0", "p", "-1/3"),)),
    ("10", 6, (("Lambda", "Sigma+", "+1/2"), ("Sigma+", "Sigma0", "+1/6"), ("Xi0", "p", "+1/3"),)),
    ("10", 7, (("Sigma0", "Xi-", "-1/6"), ("Sigma-", "Xi0", "+1/3"), ("Lambda", "Xi-", "-1/2"),)),
    ("8A", 1, (("Sigma0", "n", "-1/6"), ("Sigma-", "p", "+1/2"), ("Lambda", "n", "+1/2"),)),
    ("8A", 2, (("Sigma+", "n", "+1/3"), ("Sigma0", "p", "+1/6"), ("Lambda", "p", "-1/2"),)),
    ("8A", 6, (("Sigma+", "Sigma0", "-2/3"), ("Xi0", "p", "+1/3"),)),
    ("8A", 7, (("Sigma0", "Xi-", "-1/6"), ("Sigma-", "Xi0", "+1/3"), ("Lambda", "Xi-", "+1/2"),)),
)
