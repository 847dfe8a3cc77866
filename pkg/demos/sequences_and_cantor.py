"""Binary sequences as an ultrametric space, and their images in [0, 1].

Run with ``python3 demos/sequences_and_cantor.py``.
"""

from fractions import Fraction

from ultrametric import d_rho, parse_sequence, phi, psi, psi_decode, shift_insert
from ultrametric.cantor import phi_collision

a = parse_sequence("0110;c0")
b = parse_sequence("0111;c0")
c = parse_sequence("1;c0")
for rho in (Fraction(1, 2), Fraction(1, 3)):
    print(f"rho = {rho}: d(a,b) = {d_rho(a, b, rho).exact()}, d(a,c) = {d_rho(a, c, rho).exact()}")

# Prepending the same symbol pushes the first disagreement one place back.
print("after a shift:", d_rho(shift_insert(1, a), shift_insert(1, b), Fraction(1, 2)).exact())

# phi reads the sequence as a binary fraction; two sequences can share an image.
print("phi(a) =", phi(a), " phi(c) =", phi(c))
print("preimages of 1/2 under phi:", [str(s) for s in phi_collision(Fraction(1, 2))])

# psi writes 2s instead of 1s in base three, which lands in the Cantor set and is one-to-one.
for s in ("1;c0", "0;c1", ";(01)*"):
    seq = parse_sequence(s)
    value = psi(seq)
    print(f"psi({s}) = {value}, decoded back to {psi_decode(value)}")
print("1/2 is in the Cantor set:", psi_decode(Fraction(1, 2)) is not None)
