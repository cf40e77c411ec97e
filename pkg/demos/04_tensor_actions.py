"""Operators on mixed tensor space and their exchange relations.

Builds the contraction operator E and the two families of braid
generators on V^{tensor r} x (V*)^{tensor s}, verifies E^2 = [n]_q E,
and checks that the quantum-group action commutes with all of them.
"""

from qschur.laurent import quantum_integer
from qschur.tensor import (mixed_basis, ugen_mixed, uprime_generators,
                           walled_generators)


def main():
    n, r, s = 2, 1, 1
    E, S, Shat = walled_generators(n, r, s)
    print(f"Mixed tensor space at n={n}, r={r}, s={s}: "
          f"{len(mixed_basis(n, r, s))} basis vectors")
    print("Matrix of the contraction operator E:")
    for key in mixed_basis(n, r, s):
        print(f"  E v_{key} =", dict(E.row(key)))

    print("\nE^2 = [n]_q E:", E.then(E) == E.scale(quantum_integer(n)))

    gens = uprime_generators(n, r + s)
    commute = all(ugen_mixed(n, r, s, g).commutes_with(w)
                  for g in gens for w in [E] + S + Shat)
    print("Quantum-group generators commute with E, S, Shat:", commute)


if __name__ == "__main__":
    main()
