"""Independent check of ker ind(conj(psi) (x) psi) for G = S4, H = D4 and the
2-dimensional irreducible psi of D4. Builds the induced matrices directly
from permutations and reads the kernel numerically."""
import itertools

import numpy as np


def compose(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


G = list(itertools.permutations(range(4)))
e = tuple(range(4))
r = (2, 3, 1, 0)        # 1->3->2->4->1 in 1-based points: (1324)
s = (1, 0, 2, 3)        # (12)
assert compose(compose(s, r), s) == inverse(r)

# closure with a word for each element, rho on generators: rotation, reflection
rot = np.array([[0, -1], [1, 0]], dtype=complex)
ref = np.array([[1, 0], [0, -1]], dtype=complex)
psi = {e: np.eye(2, dtype=complex)}
frontier = [e]
while frontier:
    nxt = []
    for x in frontier:
        for gen, m in ((r, rot), (s, ref)):
            y = compose(x, gen)
            if y not in psi:
                psi[y] = psi[x] @ m
                nxt.append(y)
    frontier = nxt
H = sorted(psi)
assert len(H) == 8
for a in H:
    for b in H:
        assert np.allclose(psi[compose(a, b)], psi[a] @ psi[b])

base = {h: np.kron(psi[h].conj(), psi[h]) for h in H}
reps = []
for g in G:
    if not any(compose(inverse(k), g) in psi for k in reps):
        reps.append(g)
n = len(reps)


def coset(g):
    for j, k in enumerate(reps):
        if compose(inverse(k), g) in psi:
            return j, compose(inverse(k), g)


def induced(g):
    m = np.zeros((4 * n, 4 * n), dtype=complex)
    for j, k in enumerate(reps):
        t, h = coset(compose(g, k))
        m[t * 4:(t + 1) * 4, j * 4:(j + 1) * 4] = base[h]
    return m


kernel = [g for g in G if np.allclose(induced(g), np.eye(4 * n))]
core_h = [g for g in G if all(compose(compose(x, g), inverse(x)) in psi for x in G)]
proj_ker_on_core = [g for g in core_h if np.allclose(psi[g], psi[g][0, 0] * np.eye(2))]
print("dim sigma", 4 * n)
print("ker sigma size", len(kernel))
print("proj ker psi on N(H) size", len(proj_ker_on_core))
