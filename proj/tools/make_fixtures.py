#!/usr/bin/env python3
"""Regenerate the bundled catalogs under data/.

j(q) = E4(q)^3 / Delta(q) with E4 = 1 + 240 sum sigma_3(n) q^n and
Delta = q prod (1 - q^n)^24, computed in exact integer arithmetic.
"""
import argparse
import json
from fractions import Fraction
from pathlib import Path


def mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def inverse(a, n):
    out = [Fraction(0)] * n
    out[0] = Fraction(1, a[0])
    for k in range(1, n):
        acc = sum(a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1))
        out[k] = -acc / a[0]
    return out


def j_coefficients(prec):
    """c_0..c_prec of j - 1/q."""
    n = prec + 2
    e4 = [1] + [240 * sum(d**3 for d in range(1, m + 1) if m % d == 0) for m in range(1, n)]
    e4_cubed = mul(mul(e4, e4, n), e4, n)
    eta24 = [1] + [0] * (n - 1)  # prod (1 - q^m)^24, Delta / q
    for m in range(1, n):
        factor = [0] * n
        factor[0], factor[m] = 1, -1
        for _ in range(24):
            eta24 = mul(eta24, factor, n)
    quotient = mul(e4_cubed, inverse(eta24, n), n)  # q * j
    assert all(c.denominator == 1 for c in quotient)
    assert quotient[0] == 1
    return [int(c) for c in quotient[1:]]


def series_eval(coeffs, s, n):
    """sum coeffs[i] * S^i where S = q^-1 * s (s given from q^-1 upward, as q*S)."""
    deg = len(coeffs) - 1
    # Work with q^deg * value so everything is a power series.
    total = [Fraction(0)] * n
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)  # (q S)^i
    for i, c in enumerate(coeffs):
        shift = deg - i  # multiply by q^shift
        for k in range(n - shift):
            total[k + shift] += c * power[k]
        power = mul(power, s, n)
    return total  # q^deg * poly(S)


def compose_series(num, den, s, n):
    """f(S) for f = num/den, S = s/q; returns coefficients of q * f(S) from q^0."""
    dn, dd = len(num) - 1, len(den) - 1
    a = series_eval(num, s, n)  # q^dn num(S)
    b = series_eval(den, s, n)  # q^dd den(S)
    assert dn - dd == 1
    return mul(a, inverse(b, n), n)  # q^(dn-dd) f(S)


def inner_solve(num, den, target, prec):
    """s = 1/q + c_0 + ... + c_prec q^prec with (num/den)(s) = target.

    target holds q^d * target(q) from q^0, d = deg num - deg den.
    """
    d = len(num) - len(den)
    pivot = Fraction(num[-1], den[-1]) * d
    c = []
    n = prec + d + 2
    for k in range(prec + 1):
        s = [Fraction(1)] + c + [Fraction(0)] * (n - len(c) - 1)
        got = general_compose(num, den, s, n)
        c.append((target[k + 1] - got[k + 1]) / pivot)
    return c


def general_compose(num, den, s, n):
    a = series_eval(num, s, n)
    b = series_eval(den, s, n)
    return mul(a, inverse(b, n), n)  # q^(deg num - deg den) f(S)


def substitute(series, r, n):
    """q * S(q) given from q^0  ->  q^r * S(q^r) from q^0."""
    out = [Fraction(0)] * n
    for i, c in enumerate(series):
        if i * r < n:
            out[i * r] = c
    return out


def planted_catalog(prec=60):
    """A(q^2) = g2(B), B = g1(C), C = h1(D), E = k(D); C is left out."""
    g2 = ([-1, 3, 1], [1])
    g1 = ([2, 1, 1], [-1, 1])
    h1 = ([-3, 0, 1], [2, 1])
    k = ([1, 1, 0, 1], [1, 0, 1])
    a = [Fraction(1)] + [Fraction(((5 * i + 2) % 9) - 4) for i in range(prec + 1)]
    n = prec + 12
    a_sq = substitute(a + [Fraction(0)] * n, 2, n)
    b = inner_solve(*g2, a_sq, prec)
    c = inner_solve(*g1, [Fraction(1)] + b + [Fraction(0)] * 4, prec - 2)
    d = inner_solve(*h1, [Fraction(1)] + c + [Fraction(0)] * 4, prec - 4)
    e = general_compose(*k, [Fraction(1)] + d, len(d) + 1)
    return [
        ("A", "1", a[1:]),
        ("B", "2", b),
        ("D", "8", d),
        ("E", "8/3", e[1:]),
    ]


def record(name, area, coeffs):
    return json.dumps({"name": name, "area": area, "coeffs": [str(c) for c in coeffs]}, separators=(", ", ": "))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=Path(__file__).resolve().parent.parent / "data", type=Path)
    parser.add_argument("--prec", type=int, default=60)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    j = j_coefficients(args.prec)
    (args.out / "j.jsonl").write_text(record("1A", "1", j) + "\n")

    # Planted pair: S1(q) = f(S2(q)) with f = (t^2 + 2t + 3)/(t + 5).
    prec = 40
    n = prec + 2
    s2 = [Fraction(1)] + [Fraction(((7 * k + 3) % 11) - 5) for k in range(n - 1)]
    s1 = compose_series([3, 2, 1], [5, 1], s2, n)
    assert s1[0] == 1
    lines = [record("S1", "1", s1[1 : prec + 2]), record("S2", "2", s2[1 : prec + 2])]
    (args.out / "synthetic_pair.jsonl").write_text("\n".join(lines) + "\n")

    lines = [record(name, area, coeffs) for name, area, coeffs in planted_catalog()]
    (args.out / "planted_four.jsonl").write_text("\n".join(lines) + "\n")

    # C = 1/q + q has C(q^2) = C^2 - 2; B solves h(B) = C, so both C(q) and
    # C(q^2) are rational in B.
    prec = 40
    c = [Fraction(1), Fraction(0), Fraction(1)] + [Fraction(0)] * (prec + 4)
    b = inner_solve([1, 3, 1], [2, 1], c, prec)
    lines = [record("C", "1", c[1 : prec + 2]), record("B", "2", b)]
    (args.out / "double_relation.jsonl").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
