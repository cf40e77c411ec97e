"""Tour of the quantized coordinate ring of n x n matrices.

Shows the normal-form rewriting of generator words, the centrality of the
quantum determinant, and a Laplace expansion of a quantum minor.
"""

from qschur.qmatrix import (AlgebraElem, laplace_expand, multiply,
                            quantum_det, quantum_minor_right)


def main():
    n = 2
    x11 = AlgebraElem.generator(1, 1)
    x22 = AlgebraElem.generator(2, 2)

    print("Reordering x22 * x11 back into normal form:")
    print("  x22*x11 =", multiply(x22, x11))
    print("  x11*x22 =", multiply(x11, x22))

    det = quantum_det(n)
    print("\nQuantum determinant for n=2:")
    print("  det_q =", det)
    central = all(multiply(det, AlgebraElem.generator(i, j)) ==
                  multiply(AlgebraElem.generator(i, j), det)
                  for i in (1, 2) for j in (1, 2))
    print("  commutes with every generator:", central)

    print("\nLaplace expansion of the full 3x3 minor by its first column:")
    total = AlgebraElem.zero()
    for coeff, (r1, c1), (r2, c2) in laplace_expand([1, 2, 3], [1, 2, 3],
                                                    1, 2):
        piece = multiply(quantum_minor_right(r1, c1),
                         quantum_minor_right(r2, c2)).scale(coeff)
        total = total + piece
        print(f"  rows {r1}|{r2}, cols {c1}|{c2}, sign-weight {coeff}")
    print("  sum equals the minor:",
          total == quantum_minor_right([1, 2, 3], [1, 2, 3]))


if __name__ == "__main__":
    main()
