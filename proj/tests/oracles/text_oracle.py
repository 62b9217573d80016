"""Direct computation of the hashed word-unigram vectors for a sentence pair."""
import math
import re

D = 64


def fnv1a64(data: bytes, seed: int = 0) -> int:
    h = 0xCBF29CE484222325 ^ seed
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def bag(cell):
    v = [0.0] * D
    for tok in re.findall(r"[a-z0-9]+", cell.lower()):
        v[fnv1a64(tok.encode()) % D] += 1.0
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v] if n else v


a = bag("The quick brown fox jumps over")
b = bag("the quick brown cat sleeps under")
print(repr(sum(x * y for x, y in zip(a, b))))
