"""Regenerate the shipped scenario files from the explicit constructions."""
import os
import sys

from wreathe import constructions as C
from wreathe.scenario import RepresentationSpec, Scenario

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "wreathe", "scenarios")


def reps_from(T, blocks):
    out = {}
    for b in blocks:
        if b.index == 1:
            out[1] = RepresentationSpec(1, principal=True)
            continue
        mats = {T.G.name(s): M for s, M in b.group_mats.items()}
        out[b.index] = RepresentationSpec(b.index, False, b.K.spec(), b.x, mats, b.gamma)
    return out


def scenarios():
    T, blocks = C.exi25_data()
    yield Scenario("exi25", 9, ["(1,2,3,4,5,6,7,8,9)"], [-3, 9, -6, 1],
                   [("(1,2,3,4,5,6,7,8,9)", "6 - 5*X + X**2")], [3], reps_from(T, blocks))
    T, blocks = C.exi26_data()
    yield Scenario("exi26", 3, ["(1,2)", "(1,2,3)"], [1, 0, 1], [("(1,2)", "-X"), ("(1,2,3)", "X")], [],
                   reps_from(T, blocks))
    T, blocks = C.exi27_data()
    yield Scenario("exi27", 8, list(C.Q8_GENERATORS), [1, 0, 0, 0, 1],
                   [(C.Q8_GENERATORS[0], "-X**3"), (C.Q8_GENERATORS[1], "X**3")], [], reps_from(T, blocks))
    yield Scenario("exmod1", 3, ["(1,2)", "(1,2,3)"], [1, 0, 1], [("(1,2)", "-X"), ("(1,2,3)", "X")], [2, 3])
    yield Scenario("exmod2", 4, ["(1,2)", "(1,2,3,4)"], C.EXMOD2_MU, [("(1,2)", "1 - X"), ("(1,2,3,4)", "1/X")],
                   [2, 3, 31])
    R = C.exmod2_s3_ring()
    act = [(c, "[" + ", ".join(str(x) for x in R.action[R.G.parse(c)]) + "]") for c in ("(1,2)", "(1,2,3)")]
    yield Scenario("exmod2_s3", 3, ["(1,2)", "(1,2,3)"], C.EXMOD2_MU, act, [31])
    yield Scenario("gauss_c2", 2, ["(1,2)"], [1, 0, 1], [("(1,2)", "-X")], [2, 3])
    T, blocks = C.s3_untwisted_data()
    yield Scenario("s3_untwisted", 3, ["(1,2)", "(1,2,3)"], [0, 1], [("(1,2)", "X"), ("(1,2,3)", "X")], [2, 3],
                   reps_from(T, blocks))
    T, blocks = C.c2_untwisted_data()
    yield Scenario("c2_untwisted", 2, ["(1,2)"], [0, 1], [("(1,2)", "X")], [2], reps_from(T, blocks))


if __name__ == "__main__":
    for sc in scenarios():
        with open(os.path.join(OUT, sc.name + ".scn"), "w") as fh:
            fh.write(sc.to_text())
        print("wrote", sc.name, file=sys.stderr)
