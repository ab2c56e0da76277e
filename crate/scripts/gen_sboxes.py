#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Generate the unmasked S-box benchmarks in the masked C dialect.

present.c       PRESENT 4-bit S-box from its algebraic normal form, 8 ANDs.
aes_tower.c     AES S-box through a GF(((2^2)^2)^2) tower inversion, 36 ANDs.

Both circuits are evaluated here on every input and checked against the
standard S-box tables before anything is written.
"""
import os
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "benchmarks")

PRESENT = [0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD, 0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2]


class Circuit:
    def __init__(self, name, inputs):
        self.name = name
        self.inputs = list(inputs)
        self.stmts = []  # (wire, op, a, b)
        self.count = {}
        self.ands = 0

    def fresh(self, hint):
        k = self.count.get(hint, 0)
        self.count[hint] = k + 1
        return f"{hint}{k}"

    def op(self, op, a, b=None, hint="t"):
        if op == "^":
            if a == "0":
                return b
            if b == "0":
                return a
        w = self.fresh(hint)
        if op == "&":
            self.ands += 1
        self.stmts.append((w, op, a, b))
        return w

    def xor_all(self, terms, hint="t"):
        acc = "0"
        for t in terms:
            acc = self.op("^", acc, t, hint)
        return acc

    def evaluate(self, assign, outputs):
        v = dict(assign)
        v["0"], v["1"] = 0, 1
        for w, op, a, b in self.stmts:
            if op == "&":
                v[w] = v[a] & v[b]
            elif op == "^":
                v[w] = v[a] ^ v[b]
            else:
                v[w] = 1 - v[a]
        return [v[o] for o in outputs]

    def emit(self, outputs, note):
        used = {}
        params = ", ".join([f"bool {i}" for i in self.inputs] + [f"bool *{y}" for y, _ in outputs])
        lines = [f"// {note}", f"int {self.name}({params})", "{"]
        for w, op, a, b in self.stmts:
            rhs = f"~{a}" if op == "~" else f"{a} {'*' if op == '&' else '^'} {b}"
            lines.append(f"    {w} = {rhs};")
        for y, src in outputs:
            lines.append(f"    *{y} = {src};")
        lines += ["    return 0;", "}", ""]
        del used
        return "\n".join(lines)


def present():
    c = Circuit("present_sbox", [f"x{i}" for i in range(4)])
    x = c.inputs
    t12 = c.op("&", x[1], x[2], "t12_")
    t13 = c.op("&", x[1], x[3], "t13_")
    t23 = c.op("&", x[2], x[3], "t23_")
    t01 = c.op("&", x[0], x[1], "t01_")
    t03 = c.op("&", x[0], x[3], "t03_")
    t012 = c.op("&", x[0], t12, "t012_")
    t013 = c.op("&", x[0], t13, "t013_")
    t023 = c.op("&", x[0], t23, "t023_")
    ys = [
        c.xor_all([x[0], x[2], t12, x[3]], "u0_"),
        c.xor_all([x[1], t012, x[3], t13, t013, t23, t023], "u1_"),
        c.op("~", c.xor_all([t01, x[2], x[3], t03, t13, t013, t023], "u2_"), hint="u2n"),
        c.op("~", c.xor_all([x[0], x[1], t12, t012, x[3], t013, t023], "u3_"), hint="u3n"),
    ]
    outs = [(f"y{i}", ys[i]) for i in range(4)]
    for v in range(16):
        got = c.evaluate({f"x{i}": (v >> i) & 1 for i in range(4)}, ys)
        assert sum(b << i for i, b in enumerate(got)) == PRESENT[v], v
    assert c.ands == 8
    return c.emit(outs, "PRESENT S-box, algebraic normal form, 8 AND gates. x0 and y0 are the LSBs.")


# --- GF(2^8) tower arithmetic on integers (reference model) ---------------

def gf256_mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0x100:
            a ^= 0x11B
        b >>= 1
    return r


def aes_sbox():
    inv = [0] * 256
    for a in range(1, 256):
        for b in range(1, 256):
            if gf256_mul(a, b) == 1:
                inv[a] = b
                break
    s = []
    for x in range(256):
        b = inv[x]
        y = 0x63
        for i in range(8):
            bit = (b >> i) ^ (b >> ((i + 4) % 8)) ^ (b >> ((i + 5) % 8)) ^ (b >> ((i + 6) % 8)) ^ (b >> ((i + 7) % 8))
            y ^= (bit & 1) << i
        s.append(y)
    return s


# GF(4) = GF(2)[w]/(w^2+w+1); element bit1 = w coefficient.
def m4(a, b):
    a1, a0, b1, b0 = a >> 1, a & 1, b >> 1, b & 1
    p, q, s = a1 & b1, a0 & b0, (a1 ^ a0) & (b1 ^ b0)
    return ((s ^ q) << 1) | (p ^ q)


def sq4(a):
    a1, a0 = a >> 1, a & 1
    return (a1 << 1) | (a1 ^ a0)


# GF(16) = GF(4)[y]/(y^2+y+NU); high nibble half = y coefficient.
NU = None
LAM = None


def m16(a, b):
    a1, a0, b1, b0 = a >> 2, a & 3, b >> 2, b & 3
    hi = m4(a1 ^ a0, b1 ^ b0) ^ m4(a0, b0)
    lo = m4(m4(a1, b1), NU) ^ m4(a0, b0)
    return (hi << 2) | lo


def m256(a, b):
    a1, a0, b1, b0 = a >> 4, a & 15, b >> 4, b & 15
    hi = m16(a1 ^ a0, b1 ^ b0) ^ m16(a0, b0)
    lo = m16(m16(a1, b1), LAM) ^ m16(a0, b0)
    return (hi << 4) | lo


def pick_constants():
    global NU, LAM
    for nu in range(1, 4):
        NU = nu
        # y^2 + y + nu irreducible over GF(4): no root.
        if all(m4(t, t) ^ t ^ nu for t in range(4)):
            break
    for lam in range(1, 16):
        LAM = lam
        if all(m16(t, t) ^ t ^ lam for t in range(16)):
            break


def gf2_matinv(rows, n):
    # rows[i] is an int bitmask of row i; returns inverse rows.
    a = [(rows[i], 1 << i) for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][0] >> col & 1)
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][0] >> col & 1:
                a[r] = (a[r][0] ^ a[col][0], a[r][1] ^ a[col][1])
    return [a[i][1] for i in range(n)]


def apply(rows, x):
    return sum((bin(rows[i] & x).count("1") & 1) << i for i in range(len(rows)))


def tower_basis():
    """Rows of the matrix taking an AES field element to tower coordinates."""
    for beta in range(2, 256):
        # beta must satisfy the AES polynomial x^8 + x^4 + x^3 + x + 1.
        pw = [1]
        for _ in range(8):
            pw.append(m256(pw[-1], beta))
        if pw[8] ^ pw[4] ^ pw[3] ^ pw[1] ^ pw[0]:
            continue
        cols = pw[:8]  # image of AES basis bit i
        rows = [sum(((cols[i] >> r) & 1) << i for i in range(8)) for r in range(8)]
        try:
            gf2_matinv(rows, 8)
        except StopIteration:
            continue
        return rows
    raise SystemExit("no basis found")


# --- circuit construction ----------------------------------------------------

def c_m4(c, a, b):
    a1, a0 = a
    b1, b0 = b
    p = c.op("&", a1, b1, "p")
    q = c.op("&", a0, b0, "p")
    s = c.op("&", c.op("^", a1, a0, "s"), c.op("^", b1, b0, "s"), "p")
    return (c.op("^", s, q, "m"), c.op("^", p, q, "m"))


def c_sq4(c, a):
    a1, a0 = a
    return (a1, c.op("^", a1, a0, "q"))


def c_scale4(c, a, k):
    """Multiply by the GF(4) constant k (linear)."""
    a1, a0 = a
    # columns: image of w and 1
    img_w, img_1 = m4(2, k), m4(1, k)
    hi = [v for v, img in ((a1, img_w), (a0, img_1)) if img >> 1 & 1]
    lo = [v for v, img in ((a1, img_w), (a0, img_1)) if img & 1]
    return (c.xor_all(hi, "k"), c.xor_all(lo, "k"))


def c_xor4(c, a, b):
    return (c.op("^", a[0], b[0], "a"), c.op("^", a[1], b[1], "a"))


def c_m16(c, a, b):
    a1, a0 = a
    b1, b0 = b
    p00 = c_m4(c, a0, b0)
    hi = c_xor4(c, c_m4(c, c_xor4(c, a1, a0), c_xor4(c, b1, b0)), p00)
    lo = c_xor4(c, c_scale4(c, c_m4(c, a1, b1), NU), p00)
    return (hi, lo)


def c_xor16(c, a, b):
    return (c_xor4(c, a[0], b[0]), c_xor4(c, a[1], b[1]))


def c_sq16(c, a):
    # (A1 y + A0)^2 = A1^2 y^2 + A0^2 = A1^2 y + (NU A1^2 + A0^2)
    s1, s0 = c_sq4(c, a[0]), c_sq4(c, a[1])
    return (s1, c_xor4(c, c_scale4(c, s1, NU), s0))


def c_scale16(c, a, k):
    """Multiply by the GF(16) constant k (linear), via its bit matrix."""
    bits = [a[0][0], a[0][1], a[1][0], a[1][1]]  # weights 8,4,2,1
    weights = [8, 4, 2, 1]
    out = []
    for ob in (3, 2, 1, 0):
        out.append(c.xor_all([v for v, wgt in zip(bits, weights) if m16(wgt, k) >> ob & 1], "l"))
    return ((out[0], out[1]), (out[2], out[3]))


def c_inv16(c, a):
    a1, a0 = a
    # delta = NU a1^2 + a1 a0 + a0^2, inverse via squaring in GF(4)
    d = c_xor4(c, c_xor4(c, c_scale4(c, c_sq4(c, a1), NU), c_m4(c, a1, a0)), c_sq4(c, a0))
    di = c_sq4(c, d)
    return (c_m4(c, a1, di), c_m4(c, c_xor4(c, a1, a0), di))


def c_inv256(c, a):
    a1, a0 = a
    d = c_xor16(c, c_xor16(c, c_scale16(c, c_sq16(c, a1), LAM), c_m16(c, a1, a0)), c_sq16(c, a0))
    di = c_inv16(c, d)
    return (c_m16(c, a1, di), c_m16(c, c_xor16(c, a1, a0), di))


def aes():
    pick_constants()
    sbox = aes_sbox()
    to_tower = tower_basis()
    from_tower = gf2_matinv(to_tower, 8)
    # sanity: the reference model inverts
    for x in range(1, 256):
        t = apply(to_tower, x)
        assert apply(from_tower, t) == x
    c = Circuit("aes_sbox", [f"x{i}" for i in range(8)])
    x = c.inputs
    tb = [c.xor_all([x[j] for j in range(8) if to_tower[r] >> j & 1], f"b{r}_") for r in range(8)]
    a = (((tb[7], tb[6]), (tb[5], tb[4])), ((tb[3], tb[2]), (tb[1], tb[0])))
    inv = c_inv256(c, a)
    ib = [inv[1][1][1], inv[1][1][0], inv[1][0][1], inv[1][0][0],
          inv[0][1][1], inv[0][1][0], inv[0][0][1], inv[0][0][0]]
    # affine layer folded with the basis change back
    aff = []
    for i in range(8):
        mask = 0
        for k in (0, 4, 5, 6, 7):
            mask ^= 1 << ((i + k) % 8)
        aff.append(mask)
    rows = []
    for i in range(8):
        r = 0
        for j in range(8):
            if aff[i] >> j & 1:
                r ^= from_tower[j]
        rows.append(r)
    ys = []
    for i in range(8):
        v = c.xor_all([ib[j] for j in range(8) if rows[i] >> j & 1], f"o{i}_")
        if 0x63 >> i & 1:
            v = c.op("~", v, hint=f"o{i}n")
        ys.append(v)
    for v in range(256):
        got = c.evaluate({f"x{i}": (v >> i) & 1 for i in range(8)}, ys)
        assert sum(b << i for i, b in enumerate(got)) == sbox[v], (v, got)
    assert c.ands == 36, c.ands
    outs = [(f"y{i}", ys[i]) for i in range(8)]
    return c.emit(outs, "AES S-box as a GF(((2^2)^2)^2) tower inversion with 36 AND gates. x0 and y0 are the LSBs.")


def main():
    os.makedirs(OUT, exist_ok=True)
    for name, text in (("present.c", present()), ("aes_tower.c", aes())):
        with open(os.path.join(OUT, name), "w") as f:
            f.write(text)
        print("wrote", name, file=sys.stderr)


if __name__ == "__main__":
    main()
