"""Walk through the monomial contact family and the Klein images of its members."""
from math import gcd

from kleincurves import contact_family, contact_ramification_report, klein_forward, klein_inverse


def main():
    print(f"{'(p, q)':>8}  {'beta':<18} {'R_1':<20} {'R_2':<20} deg f  deg g")
    for q in range(2, 7):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            m = contact_family(p, q)
            rep = contact_ramification_report(m.curve, m.beta)
            g = klein_forward(m.curve, m.beta)
            assert klein_inverse(g) == m.curve
            print(f"{str((p, q)):>8}  {str(m.beta):<18} {str(m.R1):<20} {str(m.R2):<20}"
                  f" {rep.degree:>4}  {rep.null_degree:>5}")
    # r2 is always even, and deg g = 4 + r1 + r2
    print("every image is null and the roundtrip returns the original curve")


if __name__ == "__main__":
    main()
