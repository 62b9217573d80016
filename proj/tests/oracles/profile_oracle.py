"""Independent reference for the column profile recipe.

Prints sparse (bucket, value) lists that test_profile.cpp freezes.
"""
import math

D = 256
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes, seed: int = 0) -> int:
    h = FNV_OFFSET ^ seed
    for b in data:
        h ^= b
        h = (h * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def add(v, token, w=1.0):
    v[fnv1a64(token.encode()) % D] += w


def add_soft(v, prefix, value, width):
    t = value / width
    lo = math.floor(t)
    frac = t - lo
    add(v, f"{prefix}:{lo}", 1.0 - frac)
    add(v, f"{prefix}:{lo + 1}", frac)


def normalize(v):
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v] if n > 0 else v


def ngram_profile(cells):
    v = [0.0] * D
    for c in cells:
        p = "^" + c.strip().lower() + "$"
        for i in range(len(p) - 2):
            add(v, p[i:i + 3])
    return normalize(v)


def quantile(s, p):
    pos = p * (len(s) - 1)
    lo = math.floor(pos)
    hi = min(lo + 1, len(s) - 1)
    return s[lo] + (pos - lo) * (s[hi] - s[lo])


def numeric_profile(cells):
    vals = [float(c) for c in cells if c.strip() != ""]
    s = sorted(math.copysign(math.log1p(abs(x)), x) for x in vals)
    n = len(s)
    mean = sum(s) / n
    sd = math.sqrt(sum((x - mean) ** 2 for x in s) / n)
    v = [0.0] * D
    add(v, "num")
    for i in range(11):
        add_soft(v, f"num:q{i}", quantile(s, i / 10), 0.5)
    add_soft(v, "num:mean", mean, 0.5)
    add_soft(v, "num:std", sd, 0.25)
    add_soft(v, "num:miss", 1.0 - n / len(cells), 0.1)
    add_soft(v, "num:card", len(set(vals)) / n, 0.1)
    add_soft(v, "num:int", sum(1 for x in vals if x == math.floor(x)) / n, 0.5)
    return normalize(v)


def sparse(v):
    return ", ".join(f"{{{i}, {x!r}}}" for i, x in enumerate(v) if x != 0.0)


def cosine(a, b):
    return sum(x * y for x, y in zip(a, b))


if __name__ == "__main__":
    cat = ["red", "Green", "red", "blue"]
    print("categorical:", sparse(ngram_profile(cat)))
    num = ["1", "2.5", "", "10", "-3", "7"]
    print("numeric:", sparse(numeric_profile(num)))
    a = ngram_profile(["aaaa"] * 5 + ["aaaaaa"] * 3)
    z = ngram_profile(["zzzz"] * 5 + ["zzzzzz"] * 3)
    print("disjoint cosine:", repr(cosine(a, z)))
