"""Regenerate the representation fixtures in ../fixtures from the example matrices."""

import json
from pathlib import Path

from montap.representation import rmat_inverse, rmat_mul
from montap.rings import CyclotomicField, PrimeField

OUT = Path(__file__).resolve().parent.parent / "fixtures"

Q7 = CyclotomicField(7)
z = Q7.root
A = ((z(1), Q7(0), Q7(0)), (Q7(0), z(2), Q7(0)), (Q7(0), Q7(0), z(4)))
B = ((Q7(0), Q7(1), Q7(0)), (Q7(0), Q7(0), Q7(1)), (Q7(1), Q7(0), Q7(0)))


def mul(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = rmat_mul(out, m)
    return out


def inv(m):
    return rmat_inverse(Q7, m)


def power(m, k):
    out = mul(B, inv(B))
    base = m if k >= 0 else inv(m)
    for _ in range(abs(k)):
        out = mul(out, base)
    return out


def conj(g, h):
    return mul(g, h, inv(g))


def dump(ring, seeds, name, note):
    # entries that are already strings are kept verbatim (integer literals as printed)
    def fmt(x):
        return x if isinstance(x, str) else ring.format(x)

    lines = [
        "{",
        f'  "description": {json.dumps(note)},',
        f'  "ring": {json.dumps(ring.to_spec())},',
        f'  "dim": {len(next(iter(seeds.values())))},',
        '  "seeds": {',
    ]
    items = list(seeds.items())
    for i, (label, mat) in enumerate(items):
        rows = ", ".join(json.dumps([fmt(x) for x in r]) for r in mat)
        lines.append(f'    "{label}": [{rows}]' + ("," if i < len(items) - 1 else ""))
    lines += ["  }", "}"]
    (OUT / name).write_text("\n".join(lines) + "\n")


def metabelian_7_5(eps):
    x = power(B, eps)
    y = mul(A, power(B, eps))
    return {"T1.x0": x, "T1.y0": y}


def twelve_a(a):
    x = B
    y = mul(power(A, a), B)
    zz = mul(power(A, a), B)
    yp = conj(mul(x, inv(y), x), y)
    xp = conj(inv(zz), x)
    zp = conj(inv(mul(x, zz)), zz)
    return {"T1.x0": x, "T1.y0": inv(y), "T2.x0": yp, "T3.x0": xp, "T3.y0": zp}


def main():
    OUT.mkdir(exist_ok=True)
    for eps, tag in ((1, "plus"), (-1, "minus")):
        dump(Q7, metabelian_7_5(eps), f"7_5_metabelian_{tag}.json",
             f"N([2,2,3]); x -> B^{eps}, y -> A B^{eps} in SL(3, Q(zeta_7))")
    F11 = PrimeField(11)
    x1 = (("1", "1"), ("0", "1"))
    x2 = (("1", "0"), ("-3", "1"))
    x3 = (("2", "1"), ("-1", "0"))
    dump(F11, {"T1.x0": x2, "T2.x0": x3, "T3.x0": x1}, "pretzel_333_f11.json",
         "P(3,3,3); x1, x2, x3 in SL(2, F_11)")
    for a in range(1, 7):
        dump(Q7, twelve_a(a), f"m_7_3_2_7_2_a{a}.json",
             f"M(7/3,2,7/2); x -> B, y -> A^{a} B, z -> A^{a} B")


if __name__ == "__main__":
    main()
