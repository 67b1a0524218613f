"""Center, eps_1 and a quaternion block inside Q(zeta_8) x| Q8."""
from fractions import Fraction

from wreathe import constructions as C
from wreathe.twisted import center_basis, epsilon1
from wreathe.wedderburn import WedderburnData, dimension_audits


def gaussian_s3():
    T, blocks = C.exi26_data()
    print("Q(i) x| S3, with (1,2) acting by conjugation and (1,2,3) trivially")
    for z in center_basis(T).elements:
        print("  center:", z)
    print("  eps_1 =", epsilon1(T))
    b = T.G.parse("(1,2,3)")
    z = T.element({b: (0, 1)}) - T.element({T.G.inv(b): (0, 1)})
    print("  z^2 =", z * z)
    audit = dimension_audits(WedderburnData(T, blocks))
    print(f"  dim = {audit['gh']} = {' + '.join(map(str, audit['block_dims']))}; center dims {audit['center_dims']}")


def quaternions():
    T, _ = C.exi27_data()
    i, j = (T.G.parse(c) for c in C.Q8_GENERATORS)
    e, I, J = C.exi27_idempotent(T, i, j)
    print("Q(zeta_8) x| Q8")
    print("  e idempotent:", e * e == e)
    print("  I^2 = -e:", I * I == -e, " J^2 = -e:", J * J == -e, " IJ = -JI:", I * J == -(J * I))


if __name__ == "__main__":
    gaussian_s3()
    print()
    quaternions()
