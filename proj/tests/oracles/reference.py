#!/usr/bin/env python3
"""Independent reference for golden values frozen into the C++ tests.

Shares no code with the library: ChaCha20 comes from the `cryptography`
package, the samplers and shuffles are written out directly, and the exact
distributions come from brute-force enumeration with fractions.Fraction.
Run it to reprint every golden value.
"""
import hashlib
import itertools
import math
import struct
from fractions import Fraction

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms


def keystream(key: bytes, nbytes: int) -> bytes:
    # cryptography's ChaCha20 nonce = 4-byte little-endian counter || 12-byte nonce.
    nonce = struct.pack("<I", 0) + b"\x00" * 12
    enc = Cipher(algorithms.ChaCha20(key, nonce), mode=None).encryptor()
    return enc.update(b"\x00" * nbytes)


class Bits:
    def __init__(self, key: bytes, nbytes: int = 1 << 20):
        self.stream = keystream(key, nbytes)
        self.pos = 0

    def next(self) -> int:
        byte = self.stream[self.pos // 8]
        bit = (byte >> (7 - self.pos % 8)) & 1
        self.pos += 1
        return bit


def key_from_hex(h: str) -> bytes:
    return bytes.fromhex(h.rjust(64, "0"))


def uniform(src, n):
    # Fast Dice Roller (Lumbroso 2013).
    v, c = 1, 0
    if n == 1:
        return 0
    while True:
        v, c = 2 * v, 2 * c + src.next()
        if v >= n:
            if c < n:
                return c
            v, c = v - n, c - n


def uniform_unresolved(n, k):
    """Mass of k-bit prefixes on which uniform(n) has not yet returned."""
    return Fraction(pow(2, k, n), 2 ** k) if n > 1 else Fraction(0)


def fisher_yates(a, src):
    n = len(a)
    for i in range(n - 1):
        j = i + uniform(src, n - i)
        a[i], a[j] = a[j], a[i]


def lehmer_rank(p):
    n = len(p)
    r = 0
    for i in range(n):
        r = r * (n - i) + sum(1 for k in range(i + 1, n) if p[k] < p[i])
    return r


def variant_distribution(variant, n):
    if variant == "naive":
        ranges = [(0, n)] * n
    elif variant == "sattolo":
        ranges = [(i + 1, n) for i in range(n - 1)]
    else:
        ranges = [(i, n) for i in range(n - 1)]
    dist = {}
    for draws in itertools.product(*[range(lo, hi) for lo, hi in ranges]):
        a = list(range(n))
        mass = Fraction(1)
        for step, j in enumerate(draws):
            a[step], a[j] = a[j], a[step]
            lo, hi = ranges[step]
            mass /= hi - lo
        r = lehmer_rank(a)
        dist[r] = dist.get(r, 0) + mass
    return dist


def canonical_table_seed(key: bytes, template: str) -> bytes:
    d = hashlib.sha256(template.encode()).digest()
    return bytes(x ^ y for x, y in zip(key, d))


def main():
    # RFC 8439 A.1 vector #1 sanity check.
    assert keystream(bytes(32), 4).hex() == "76b8e0ad"

    zero = Bits(bytes(32))
    print("zero-key first 16 bits:", "".join(str(zero.next()) for _ in range(16)))

    for h in ("01", "02"):
        b = Bits(key_from_hex(h))
        word = 0
        for _ in range(64):
            word = (word << 1) | b.next()
        print(f"key {h} first 64 bits: 0x{word:016x}")

    b = Bits(key_from_hex("2a"))
    a = [0, 1, 2, 3]
    fisher_yates(a, b)
    print("n=4 shuffle seed 2a:", a, "bits", b.pos)

    b = Bits(key_from_hex("c0ffee"))
    lines = [f"line{i:02d}" for i in range(10)]
    fisher_yates(lines, b)
    print("cmd_shuffle seed c0ffee:", lines)

    key = key_from_hex("5eed")
    b = Bits(canonical_table_seed(key, "DDDDD"), nbytes=1 << 22)
    fwd = list(range(100000))
    fisher_yates(fwd, b)
    digest = hashlib.sha256(b"".join(struct.pack("<I", v) for v in fwd)).hexdigest()
    print("DDDDD key 5eed forward digest:", digest)
    print("DDDDD key 5eed forward[:4]:", fwd[:4], "token(00042):", f"{fwd[42]:05d}")
    print("fingerprint(5eed):", hashlib.sha256(key).hexdigest()[:32])

    for variant, n in (("naive", 3), ("sattolo", 3), ("naive", 2)):
        d = variant_distribution(variant, n)
        print(f"{variant} n={n}:", {r: str(d.get(r, 0)) for r in range(math.factorial(n))})

    for n in range(2, 9):
        u = uniform_unresolved(n, 64)
        print(f"uniform({n}) unresolved at depth 64: 2^{math.log2(u) if u else '-inf'}")

    for variant, n in (("naive", 3), ("sattolo", 4)):
        d = variant_distribution(variant, n)
        k = math.factorial(n)
        lam = 100000 * k * sum((d.get(r, 0) - Fraction(1, k)) ** 2 for r in range(k))
        print(f"{variant} n={n} expected statistic at 1e5: {float(lam) + k - 1:.6f}")


if __name__ == "__main__":
    main()
