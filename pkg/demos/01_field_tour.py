"""Tour of the finite-field layer.

Builds a few fields F_q with q = 1 (mod 4), shows how elements are encoded
as dense indices, and exercises the arithmetic lookup tables.
"""

import numpy as np

from mixedsums import build_field

for p, n in [(13, 1), (3, 2), (7, 2)]:
    f = build_field(p, n)
    print(f"F_{f.q} = F_{p}^{n}, modulus coefficients {f.params.modulus}, "
          f"generator index {f.g}")

    # Element index <-> coefficient vector of the residue polynomial.
    x = f.g
    print(f"  digits of g: {[int(d) for d in f.digits[x]]}")

    # exp/log tables: every unit is a power of g.
    t = f.dlog(x)
    assert f.exp_table[t] == x

    # i = g^((q-1)/4) is a square root of -1.
    i = f.i_elem
    print(f"  i = g^{(f.q - 1) // 4} = {i},  i^2 = {f.mul(i, i)}, "
          f"-1 = {f.neg(1)}")
    assert f.mul(i, i) == f.neg(1)

    # Vectorized arithmetic over the whole unit group.
    u = f.units()
    assert np.all(f.mul(u, f.inv(u)) == 1)

    # Absolute trace down to F_p, used by the additive character.
    print(f"  traces of 1, g, g^2: "
          f"{[int(f.trace(v)) for v in (1, f.g, f.mul(f.g, f.g))]}")
    print()

print("field layer demo complete")
