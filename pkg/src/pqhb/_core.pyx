# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled ChaCha20 and Poly1305 kernels.

Drop-in replacement for ``pqhb._purecore``; ``pqhb.backend`` prefers this
module when the extension was built. Poly1305 uses 26-bit limbs with 64-bit
accumulators (the portable "donna" formulation), ChaCha20 is a plain
unrolled 32-bit implementation. No SIMD: portability over peak speed.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING
from libc.stdint cimport uint8_t, uint32_t, uint64_t
from libc.string cimport memcpy, memset


cdef inline uint32_t _rotl(uint32_t x, int n) noexcept nogil:
    return (x << n) | (x >> (32 - n))


cdef inline uint32_t _le32(const uint8_t *p) noexcept nogil:
    return (<uint32_t>p[0]) | (<uint32_t>p[1] << 8) | (<uint32_t>p[2] << 16) | (<uint32_t>p[3] << 24)


cdef inline void _store32(uint8_t *p, uint32_t v) noexcept nogil:
    p[0] = v & 0xff
    p[1] = (v >> 8) & 0xff
    p[2] = (v >> 16) & 0xff
    p[3] = (v >> 24) & 0xff


cdef void _chacha_core(const uint8_t *key, uint32_t counter, const uint8_t *nonce,
                       uint8_t *out) noexcept nogil:
    cdef uint32_t s[16]
    cdef uint32_t x[16]
    cdef int i

    s[0] = 0x61707865; s[1] = 0x3320646e; s[2] = 0x79622d32; s[3] = 0x6b206574
    for i in range(8):
        s[4 + i] = _le32(key + 4 * i)
    s[12] = counter
    s[13] = _le32(nonce)
    s[14] = _le32(nonce + 4)
    s[15] = _le32(nonce + 8)

    for i in range(16):
        x[i] = s[i]

    for i in range(10):
        # column rounds
        x[0] += x[4]; x[12] ^= x[0]; x[12] = _rotl(x[12], 16)
        x[8] += x[12]; x[4] ^= x[8]; x[4] = _rotl(x[4], 12)
        x[0] += x[4]; x[12] ^= x[0]; x[12] = _rotl(x[12], 8)
        x[8] += x[12]; x[4] ^= x[8]; x[4] = _rotl(x[4], 7)

        x[1] += x[5]; x[13] ^= x[1]; x[13] = _rotl(x[13], 16)
        x[9] += x[13]; x[5] ^= x[9]; x[5] = _rotl(x[5], 12)
        x[1] += x[5]; x[13] ^= x[1]; x[13] = _rotl(x[13], 8)
        x[9] += x[13]; x[5] ^= x[9]; x[5] = _rotl(x[5], 7)

        x[2] += x[6]; x[14] ^= x[2]; x[14] = _rotl(x[14], 16)
        x[10] += x[14]; x[6] ^= x[10]; x[6] = _rotl(x[6], 12)
        x[2] += x[6]; x[14] ^= x[2]; x[14] = _rotl(x[14], 8)
        x[10] += x[14]; x[6] ^= x[10]; x[6] = _rotl(x[6], 7)

        x[3] += x[7]; x[15] ^= x[3]; x[15] = _rotl(x[15], 16)
        x[11] += x[15]; x[7] ^= x[11]; x[7] = _rotl(x[7], 12)
        x[3] += x[7]; x[15] ^= x[3]; x[15] = _rotl(x[15], 8)
        x[11] += x[15]; x[7] ^= x[11]; x[7] = _rotl(x[7], 7)

        # diagonal rounds
        x[0] += x[5]; x[15] ^= x[0]; x[15] = _rotl(x[15], 16)
        x[10] += x[15]; x[5] ^= x[10]; x[5] = _rotl(x[5], 12)
        x[0] += x[5]; x[15] ^= x[0]; x[15] = _rotl(x[15], 8)
        x[10] += x[15]; x[5] ^= x[10]; x[5] = _rotl(x[5], 7)

        x[1] += x[6]; x[12] ^= x[1]; x[12] = _rotl(x[12], 16)
        x[11] += x[12]; x[6] ^= x[11]; x[6] = _rotl(x[6], 12)
        x[1] += x[6]; x[12] ^= x[1]; x[12] = _rotl(x[12], 8)
        x[11] += x[12]; x[6] ^= x[11]; x[6] = _rotl(x[6], 7)

        x[2] += x[7]; x[13] ^= x[2]; x[13] = _rotl(x[13], 16)
        x[8] += x[13]; x[7] ^= x[8]; x[7] = _rotl(x[7], 12)
        x[2] += x[7]; x[13] ^= x[2]; x[13] = _rotl(x[13], 8)
        x[8] += x[13]; x[7] ^= x[8]; x[7] = _rotl(x[7], 7)

        x[3] += x[4]; x[14] ^= x[3]; x[14] = _rotl(x[14], 16)
        x[9] += x[14]; x[4] ^= x[9]; x[4] = _rotl(x[4], 12)
        x[3] += x[4]; x[14] ^= x[3]; x[14] = _rotl(x[14], 8)
        x[9] += x[14]; x[4] ^= x[9]; x[4] = _rotl(x[4], 7)

    for i in range(16):
        _store32(out + 4 * i, x[i] + s[i])


def chacha20_block(key: bytes, counter: int, nonce: bytes) -> bytes:
    """One 64-byte keystream block (20 rounds, feed-forward, LE words)."""
    if len(key) != 32:
        raise ValueError("key must be 32 bytes")
    if len(nonce) != 12:
        raise ValueError("nonce must be 12 bytes")
    if not 0 <= counter <= 0xFFFFFFFF:
        raise ValueError("counter must fit in 32 bits")
    cdef const uint8_t *k = <const uint8_t *> PyBytes_AS_STRING(key)
    cdef const uint8_t *n = <const uint8_t *> PyBytes_AS_STRING(nonce)
    out = PyBytes_FromStringAndSize(NULL, 64)
    _chacha_core(k, <uint32_t> counter, n, <uint8_t *> PyBytes_AS_STRING(out))
    return out


def chacha20_xor(key: bytes, counter: int, nonce: bytes, data: bytes) -> bytes:
    """XOR ``data`` with the keystream starting at block ``counter``.

    The block counter wraps modulo 2**32, matching the 32-bit counter word.
    """
    if len(key) != 32:
        raise ValueError("key must be 32 bytes")
    if len(nonce) != 12:
        raise ValueError("nonce must be 12 bytes")
    if not 0 <= counter <= 0xFFFFFFFF:
        raise ValueError("counter must fit in 32 bits")
    cdef Py_ssize_t total = len(data)
    if total == 0:
        return b""
    cdef const uint8_t *k = <const uint8_t *> PyBytes_AS_STRING(key)
    cdef const uint8_t *n = <const uint8_t *> PyBytes_AS_STRING(nonce)
    cdef const uint8_t *src = <const uint8_t *> PyBytes_AS_STRING(data)
    out = PyBytes_FromStringAndSize(NULL, total)
    cdef uint8_t *dst = <uint8_t *> PyBytes_AS_STRING(out)
    cdef uint8_t block[64]
    cdef uint32_t ctr = <uint32_t> counter
    cdef Py_ssize_t off = 0
    cdef Py_ssize_t chunk
    cdef Py_ssize_t i
    with nogil:
        while off < total:
            _chacha_core(k, ctr, n, block)
            ctr += 1
            chunk = total - off
            if chunk > 64:
                chunk = 64
            for i in range(chunk):
                dst[off + i] = src[off + i] ^ block[i]
            off += chunk
    return out


def poly1305_tag(key_material: bytes, message: bytes) -> bytes:
    """One-time authenticator over ``message`` with a 32-byte (r, s) key."""
    if len(key_material) != 32:
        raise ValueError("key material must be 32 bytes")
    cdef const uint8_t *km = <const uint8_t *> PyBytes_AS_STRING(key_material)
    cdef const uint8_t *msg = <const uint8_t *> PyBytes_AS_STRING(message)
    cdef Py_ssize_t mlen = len(message)

    cdef uint32_t t0 = _le32(km) & 0x0fffffff
    cdef uint32_t t1 = _le32(km + 4) & 0x0ffffffc
    cdef uint32_t t2 = _le32(km + 8) & 0x0ffffffc
    cdef uint32_t t3 = _le32(km + 12) & 0x0ffffffc

    cdef uint64_t r0 = t0 & 0x3ffffff
    cdef uint64_t r1 = ((t0 >> 26) | (t1 << 6)) & 0x3ffffff
    cdef uint64_t r2 = ((t1 >> 20) | (t2 << 12)) & 0x3ffffff
    cdef uint64_t r3 = ((t2 >> 14) | (t3 << 18)) & 0x3ffffff
    cdef uint64_t r4 = t3 >> 8
    cdef uint64_t s1 = r1 * 5, s2 = r2 * 5, s3 = r3 * 5, s4 = r4 * 5

    cdef uint64_t h0 = 0, h1 = 0, h2 = 0, h3 = 0, h4 = 0
    cdef uint64_t d0, d1, d2, d3, d4, c
    cdef uint32_t m0, m1, m2, m3, hibit
    cdef uint8_t buf[16]
    cdef Py_ssize_t off = 0, rem
    cdef const uint8_t *p

    with nogil:
        while off < mlen:
            rem = mlen - off
            if rem >= 16:
                p = msg + off
                hibit = 1
                off += 16
            else:
                memset(buf, 0, 16)
                memcpy(buf, msg + off, rem)
                buf[rem] = 1
                p = buf
                hibit = 0
                off = mlen
            m0 = _le32(p)
            m1 = _le32(p + 4)
            m2 = _le32(p + 8)
            m3 = _le32(p + 12)
            h0 += m0 & 0x3ffffff
            h1 += ((m0 >> 26) | (m1 << 6)) & 0x3ffffff
            h2 += ((m1 >> 20) | (m2 << 12)) & 0x3ffffff
            h3 += ((m2 >> 14) | (m3 << 18)) & 0x3ffffff
            h4 += (m3 >> 8) | (<uint64_t> hibit << 24)

            d0 = h0 * r0 + h1 * s4 + h2 * s3 + h3 * s2 + h4 * s1
            d1 = h0 * r1 + h1 * r0 + h2 * s4 + h3 * s3 + h4 * s2
            d2 = h0 * r2 + h1 * r1 + h2 * r0 + h3 * s4 + h4 * s3
            d3 = h0 * r3 + h1 * r2 + h2 * r1 + h3 * r0 + h4 * s4
            d4 = h0 * r4 + h1 * r3 + h2 * r2 + h3 * r1 + h4 * r0

            c = d0 >> 26; h0 = d0 & 0x3ffffff
            d1 += c; c = d1 >> 26; h1 = d1 & 0x3ffffff
            d2 += c; c = d2 >> 26; h2 = d2 & 0x3ffffff
            d3 += c; c = d3 >> 26; h3 = d3 & 0x3ffffff
            d4 += c; c = d4 >> 26; h4 = d4 & 0x3ffffff
            h0 += c * 5; c = h0 >> 26; h0 &= 0x3ffffff
            h1 += c

        # final reduction mod 2^130 - 5
        c = h1 >> 26; h1 &= 0x3ffffff
        h2 += c; c = h2 >> 26; h2 &= 0x3ffffff
        h3 += c; c = h3 >> 26; h3 &= 0x3ffffff
        h4 += c; c = h4 >> 26; h4 &= 0x3ffffff
        h0 += c * 5; c = h0 >> 26; h0 &= 0x3ffffff
        h1 += c

        # compare against p by computing h + 5 - 2^130
        d0 = h0 + 5; c = d0 >> 26; d0 &= 0x3ffffff
        d1 = h1 + c; c = d1 >> 26; d1 &= 0x3ffffff
        d2 = h2 + c; c = d2 >> 26; d2 &= 0x3ffffff
        d3 = h3 + c; c = d3 >> 26; d3 &= 0x3ffffff
        d4 = h4 + c - (<uint64_t> 1 << 26)

        # select d when h >= p (no borrow in d4), else keep h
        c = (d4 >> 63) - 1  # all-ones when h >= p
        h0 = (h0 & ~c) | (d0 & c)
        h1 = (h1 & ~c) | (d1 & c)
        h2 = (h2 & ~c) | (d2 & c)
        h3 = (h3 & ~c) | (d3 & c)
        h4 = (h4 & ~c) | (d4 & c)

        # recombine to 4 LE words and add s with carry
        d0 = (h0 | (h1 << 26)) & 0xffffffff
        d1 = ((h1 >> 6) | (h2 << 20)) & 0xffffffff
        d2 = ((h2 >> 12) | (h3 << 14)) & 0xffffffff
        d3 = ((h3 >> 18) | (h4 << 8)) & 0xffffffff

        c = d0 + _le32(km + 16); d0 = c & 0xffffffff
        c = d1 + _le32(km + 20) + (c >> 32); d1 = c & 0xffffffff
        c = d2 + _le32(km + 24) + (c >> 32); d2 = c & 0xffffffff
        c = d3 + _le32(km + 28) + (c >> 32); d3 = c & 0xffffffff

    tag = PyBytes_FromStringAndSize(NULL, 16)
    cdef uint8_t *tp = <uint8_t *> PyBytes_AS_STRING(tag)
    _store32(tp, <uint32_t> d0)
    _store32(tp + 4, <uint32_t> d1)
    _store32(tp + 8, <uint32_t> d2)
    _store32(tp + 12, <uint32_t> d3)
    return tag
