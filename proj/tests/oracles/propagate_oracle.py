"""Straight-line evaluation of the generator's message passing on a 3-node path.

Parameters are filled as theta[k] = 0.5 * sin(k + 1) over the flat layout,
|V| = 4, h = 3, R = 2, no dataset rows. Prints final node embeddings
(row per node) and h_G.
"""
import numpy as np

V, H, R = 4, 3, 2
shapes = [
    ("type", V, H), ("dataset", 0, H),
    ("w1", H, 2 * H), ("b1", H, 1), ("dir", H, 1), ("w2", H, H), ("b2", H, 1),
    ("wz", H, H), ("uz", H, H), ("bz", H, 1),
    ("wr", H, H), ("ur", H, H), ("br", H, 1),
    ("wn", H, H), ("un", H, H), ("bn", H, 1),
    ("gw", 2 * H, H), ("gb", 2 * H, 1), ("pw", 2 * H, H), ("pb", 2 * H, 1),
    ("aw", V + 1, 2 * H), ("ab", V + 1, 1), ("ew", 1, 3 * H), ("eb", 1, 1),
    ("pm", H, H), ("pv", H, 1),
]
total = sum(r * c for _, r, c in shapes)
theta = 0.5 * np.sin(np.arange(total) + 1.0)
P, off = {}, 0
for name, r, c in shapes:
    P[name] = theta[off:off + r * c].reshape(r, c)
    off += r * c


def sig(x):
    return 1.0 / (1.0 + np.exp(-x))


types = [0, 1, 3]
edges = [(0, 1), (1, 2)]
h = [P["type"][t].copy() for t in types]
for _ in range(R):
    agg = [np.zeros(H) for _ in h]
    for s, d in edges:
        x = np.concatenate([h[s], h[d]])
        base = P["w1"] @ x + P["b1"][:, 0]
        to_dst = P["w2"] @ np.tanh(base + P["dir"][:, 0]) + P["b2"][:, 0]
        to_src = P["w2"] @ np.tanh(base - P["dir"][:, 0]) + P["b2"][:, 0]
        agg[d] = agg[d] + to_dst
        agg[s] = agg[s] + to_src
    new = []
    for v in range(len(h)):
        a, hv = agg[v], h[v]
        z = sig(P["wz"] @ a + P["uz"] @ hv + P["bz"][:, 0])
        r = sig(P["wr"] @ a + P["ur"] @ hv + P["br"][:, 0])
        n = np.tanh(P["wn"] @ a + P["bn"][:, 0] + r * (P["un"] @ hv))
        new.append((1 - z) * n + z * hv)
    h = new
hg = sum(sig(P["gw"] @ hv + P["gb"][:, 0]) * (P["pw"] @ hv + P["pb"][:, 0]) for hv in h)
for hv in h:
    print(", ".join(repr(float(x)) for x in hv))
print(", ".join(repr(float(x)) for x in hg))
