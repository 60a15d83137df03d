"""Print a few Hurwitz zeta values and compare the two independent algorithms.

Run with ``python3 demos/hurwitz_values.py``.
"""
from hurwitz_kit import dirichlet_beta, hurwitz_zeta, hurwitz_zeta_hermite, hurwitz_zeta_star

POINTS = [(2.0, 1.0), (-0.5, 0.25), (-3.7, 2.0), (0.5, 0.5), (4.2, 0.1)]


def main():
    print(f"{'z':>6} {'q':>6} {'euler-maclaurin':>22} {'hermite':>22} {'diff':>9}")
    for z, q in POINTS:
        a, b = hurwitz_zeta(z, q), hurwitz_zeta_hermite(z, q)
        print(f"{z:6.2f} {q:6.2f} {a:22.15g} {b:22.15g} {abs(a - b):9.1e}")
    # the shifted function stays finite at q = 0 for positive z
    print("zeta_*(2, 0) =", hurwitz_zeta_star(2.0, 0.0))
    print("Catalan G = beta(2) =", dirichlet_beta(2.0))


if __name__ == "__main__":
    main()
