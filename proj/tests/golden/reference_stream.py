"""Independent reference for the sampler stream: SplitMix64 counter draws,
Box-Muller normals, Gram-Schmidt bases and random_pd spectra."""
import math
import numpy as np

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix(z):
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class Stream:
    def __init__(self, key):
        self.key, self.i = key & MASK, 0

    def u64(self):
        self.i += 1
        return mix(self.key + self.i * GAMMA)

    def uniform(self, lo=0.0, hi=1.0):
        return lo + (hi - lo) * ((self.u64() >> 11) * 2.0**-53)

    def normal(self):
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def substream(self, tag):
        return Stream(mix(self.key ^ mix(tag + GAMMA)))


def random_orthogonal(n, rng):
    z = np.array([[rng.normal() for _ in range(n)] for _ in range(n)])
    for j in range(n):
        for _ in range(2):
            for i in range(j):
                z[:, j] -= (z[:, i] @ z[:, j]) * z[:, i]
        z[:, j] /= np.linalg.norm(z[:, j])
    return z


def random_pd(seed, n, lo, hi):
    rng = Stream(seed).substream(0xD7)
    v = random_orthogonal(n, rng)
    u = np.array([rng.uniform(lo, hi) for _ in range(n)])
    return v @ np.diag(u) @ v.T, np.sort(u)[::-1]


if __name__ == "__main__":
    for key in (0, 0x1234):
        s = Stream(key)
        print(key, [hex(s.u64()) for _ in range(4)])
    for seed in (1, 7, 2024):
        a, eig = random_pd(seed, 4, 1.0, 2.0)
        print(seed, [repr(x) for x in eig], repr(a[0, 0]), repr(a[0, 1]), repr(np.linalg.eigvalsh(a)[::-1][0]))
