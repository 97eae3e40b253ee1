"""Brute-force oracle for tower dimensions.

Builds the alternating tensor words sigma, sigma-bar, ... as explicit
Kronecker products and counts the commutant dimension of each word by
solving the linear system A X = X A for every group element. No character
theory is involved.
"""
import itertools

import numpy as np


def commutant_dim(mats):
    m = mats[0].shape[0]
    eye = np.eye(m)
    rows = [np.kron(g.T, eye) - np.kron(eye, g) for g in mats]
    s = np.linalg.svd(np.vstack(rows), compute_uv=False)
    return int(np.sum(s < 1e-9 * max(1.0, s[0])))


def word_dims(sigma, levels):
    dims = [1]
    word = [np.eye(1) for _ in sigma]
    for n in range(1, levels + 1):
        letter = sigma if n % 2 == 1 else [np.conj(g) for g in sigma]
        word = [np.kron(w, l) for w, l in zip(word, letter)]
        dims.append(commutant_dim(word))
    return dims


def regular(table):
    n = len(table)
    mats = []
    for g in range(n):
        p = np.zeros((n, n))
        for x in range(n):
            p[table[g][x], x] = 1
        mats.append(p)
    return mats


z2 = [[0, 1], [1, 0]]
v4 = [[a ^ b for b in range(4)] for a in range(4)]

print("Z2 regular:", word_dims(regular(z2), 3), "index", len(z2) ** 2)

pauli = [np.eye(2), np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]),
         np.array([[1, 0], [0, -1]])]
sigma = [np.kron(np.conj(p), p) for p in pauli]
print("Pauli sigma:", word_dims(sigma, 2), "index", sigma[0].shape[0] ** 2)

# cocycle c(g,h) = psi(gh) (psi(g) psi(h))^{-1}, read at entry (0,0)
c = pauli[3] @ np.linalg.inv(pauli[1] @ pauli[2])
print("Pauli c((1,0),(0,1)) =", c[0, 0], "scalar:", np.allclose(c, c[0, 0] * np.eye(2)))
print("Pauli sigma character:", [np.trace(s).real for s in sigma])

# S3 as permutations; Frobenius by hand: induce faithful char of Z3 = <(123)>
perms = [p for p in itertools.permutations(range(3))]
def compose(a, b):
    return tuple(a[b[i]] for i in range(3))
r = (1, 2, 0)
w = np.exp(2j * np.pi / 3)
h_char = {(0, 1, 2): 1, r: w, compose(r, r): w * w}
chi = {}
for g in perms:
    tot = 0
    for k in perms:
        kinv = tuple(np.argsort(k))
        c_ = compose(kinv, compose(g, k))
        if c_ in h_char:
            tot += h_char[c_]
    chi[g] = tot / 3  # sum over G divided by |H|
print("S3 ind chi (e, 3-cycle, transposition):", chi[(0, 1, 2)], chi[r], chi[(1, 0, 2)])
