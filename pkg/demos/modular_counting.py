"""Count simple modules of the reduction mod p three ways and list the blocks."""
import sys

from wreathe import constructions as C
from wreathe import modular as mod

primes = [int(a) for a in sys.argv[1:]] or [2, 3, 31]
R = C.exmod2_ring(primes)
print("S4 acting on Q(gamma), gamma^(1,2) = 1 - gamma, gamma^(1,2,3,4) = 1/gamma")
for p in primes:
    A = mod.build_residue_algebra(R, p)
    J = mod.jacobson_radical(A)
    Q = A if J.dim == 0 else mod.quotient_algebra(A, J)[0]
    z = mod.brauer_z(R, p)
    kul = mod.kulshammer_spaces(A)[2]
    zq = mod.center(Q).dim
    print(f"p = {p}: dim {A.dim}, radical {J.dim}; z = {z}, dim A/bLCP = {kul}, dim Z(A/J) = {zq}")
    for b in mod.block_decompose(Q):
        print(f"    simple module of dim {b.simple_dim} over F_{p}, endomorphisms {b.endo_field}")
