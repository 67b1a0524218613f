"""Wedderburn colength: closed formula against a Smith-form count."""
from wreathe import constructions as C
from wreathe.colength import direct_embedding_colength, faithful_invariants, wedderburn_colength
from wreathe.numberring import local_data

cases = [("Q(i), complex conjugation", C.gauss_c2_ring, [2, 3, 5]),
         ("S3 on the sextic field", C.exmod2_s3_ring, [2, 3, 31])]
for label, build, primes in cases:
    R = build(primes)
    print(label)
    for p in primes:
        ld = local_data(R, p)
        f = wedderburn_colength(R.g, R.h, R.n, None, ld.delta, faithful_invariants(R), p)
        print(f"  p = {p}: e = {ld.e}, delta = {ld.delta}; formula {f}, Smith oracle {direct_embedding_colength(R, p)}")
