"""Pure-Python ChaCha20 and Poly1305 kernels.

Same contract as the compiled ``pqhb._core`` extension; selected by
``pqhb.backend`` when the extension is missing or explicitly disabled.
The round loop is unrolled onto local variables, which is the fastest
formulation CPython offers, but it still runs two to three orders of
magnitude behind the C kernels (see ``benchmarks/compare_backends.py``).
"""

from __future__ import annotations

import struct

_MASK = 0xFFFFFFFF
# "expand 32-byte k" as four little-endian words
_C0, _C1, _C2, _C3 = 0x61707865, 0x3320646E, 0x79622D32, 0x6B206574

_P1305 = (1 << 130) - 5
_CLAMP = 0x0FFFFFFC0FFFFFFC0FFFFFFC0FFFFFFF


def _block_words(k: tuple, counter: int, n: tuple) -> bytes:
    x0, x1, x2, x3 = _C0, _C1, _C2, _C3
    x4, x5, x6, x7, x8, x9, x10, x11 = k
    x12 = counter & _MASK
    x13, x14, x15 = n

    for _ in range(10):
        # column rounds
        x0 = (x0 + x4) & _MASK; x12 ^= x0; x12 = ((x12 << 16) & _MASK) | (x12 >> 16)
        x8 = (x8 + x12) & _MASK; x4 ^= x8; x4 = ((x4 << 12) & _MASK) | (x4 >> 20)
        x0 = (x0 + x4) & _MASK; x12 ^= x0; x12 = ((x12 << 8) & _MASK) | (x12 >> 24)
        x8 = (x8 + x12) & _MASK; x4 ^= x8; x4 = ((x4 << 7) & _MASK) | (x4 >> 25)

        x1 = (x1 + x5) & _MASK; x13 ^= x1; x13 = ((x13 << 16) & _MASK) | (x13 >> 16)
        x9 = (x9 + x13) & _MASK; x5 ^= x9; x5 = ((x5 << 12) & _MASK) | (x5 >> 20)
        x1 = (x1 + x5) & _MASK; x13 ^= x1; x13 = ((x13 << 8) & _MASK) | (x13 >> 24)
        x9 = (x9 + x13) & _MASK; x5 ^= x9; x5 = ((x5 << 7) & _MASK) | (x5 >> 25)

        x2 = (x2 + x6) & _MASK; x14 ^= x2; x14 = ((x14 << 16) & _MASK) | (x14 >> 16)
        x10 = (x10 + x14) & _MASK; x6 ^= x10; x6 = ((x6 << 12) & _MASK) | (x6 >> 20)
        x2 = (x2 + x6) & _MASK; x14 ^= x2; x14 = ((x14 << 8) & _MASK) | (x14 >> 24)
        x10 = (x10 + x14) & _MASK; x6 ^= x10; x6 = ((x6 << 7) & _MASK) | (x6 >> 25)

        x3 = (x3 + x7) & _MASK; x15 ^= x3; x15 = ((x15 << 16) & _MASK) | (x15 >> 16)
        x11 = (x11 + x15) & _MASK; x7 ^= x11; x7 = ((x7 << 12) & _MASK) | (x7 >> 20)
        x3 = (x3 + x7) & _MASK; x15 ^= x3; x15 = ((x15 << 8) & _MASK) | (x15 >> 24)
        x11 = (x11 + x15) & _MASK; x7 ^= x11; x7 = ((x7 << 7) & _MASK) | (x7 >> 25)

        # diagonal rounds
        x0 = (x0 + x5) & _MASK; x15 ^= x0; x15 = ((x15 << 16) & _MASK) | (x15 >> 16)
        x10 = (x10 + x15) & _MASK; x5 ^= x10; x5 = ((x5 << 12) & _MASK) | (x5 >> 20)
        x0 = (x0 + x5) & _MASK; x15 ^= x0; x15 = ((x15 << 8) & _MASK) | (x15 >> 24)
        x10 = (x10 + x15) & _MASK; x5 ^= x10; x5 = ((x5 << 7) & _MASK) | (x5 >> 25)

        x1 = (x1 + x6) & _MASK; x12 ^= x1; x12 = ((x12 << 16) & _MASK) | (x12 >> 16)
        x11 = (x11 + x12) & _MASK; x6 ^= x11; x6 = ((x6 << 12) & _MASK) | (x6 >> 20)
        x1 = (x1 + x6) & _MASK; x12 ^= x1; x12 = ((x12 << 8) & _MASK) | (x12 >> 24)
        x11 = (x11 + x12) & _MASK; x6 ^= x11; x6 = ((x6 << 7) & _MASK) | (x6 >> 25)

        x2 = (x2 + x7) & _MASK; x13 ^= x2; x13 = ((x13 << 16) & _MASK) | (x13 >> 16)
        x8 = (x8 + x13) & _MASK; x7 ^= x8; x7 = ((x7 << 12) & _MASK) | (x7 >> 20)
        x2 = (x2 + x7) & _MASK; x13 ^= x2; x13 = ((x13 << 8) & _MASK) | (x13 >> 24)
        x8 = (x8 + x13) & _MASK; x7 ^= x8; x7 = ((x7 << 7) & _MASK) | (x7 >> 25)

        x3 = (x3 + x4) & _MASK; x14 ^= x3; x14 = ((x14 << 16) & _MASK) | (x14 >> 16)
        x9 = (x9 + x14) & _MASK; x4 ^= x9; x4 = ((x4 << 12) & _MASK) | (x4 >> 20)
        x3 = (x3 + x4) & _MASK; x14 ^= x3; x14 = ((x14 << 8) & _MASK) | (x14 >> 24)
        x9 = (x9 + x14) & _MASK; x4 ^= x9; x4 = ((x4 << 7) & _MASK) | (x4 >> 25)

    return struct.pack(
        "<16I",
        (x0 + _C0) & _MASK, (x1 + _C1) & _MASK, (x2 + _C2) & _MASK, (x3 + _C3) & _MASK,
        (x4 + k[0]) & _MASK, (x5 + k[1]) & _MASK, (x6 + k[2]) & _MASK, (x7 + k[3]) & _MASK,
        (x8 + k[4]) & _MASK, (x9 + k[5]) & _MASK, (x10 + k[6]) & _MASK, (x11 + k[7]) & _MASK,
        (x12 + counter) & _MASK, (x13 + n[0]) & _MASK, (x14 + n[1]) & _MASK, (x15 + n[2]) & _MASK,
    )


def chacha20_block(key: bytes, counter: int, nonce: bytes) -> bytes:
    """One 64-byte keystream block (20 rounds, feed-forward, LE words)."""
    if len(key) != 32:
        raise ValueError("key must be 32 bytes")
    if len(nonce) != 12:
        raise ValueError("nonce must be 12 bytes")
    if not 0 <= counter <= _MASK:
        raise ValueError("counter must fit in 32 bits")
    return _block_words(struct.unpack("<8I", key), counter, struct.unpack("<3I", nonce))


def chacha20_xor(key: bytes, counter: int, nonce: bytes, data: bytes) -> bytes:
    """XOR ``data`` with the keystream starting at block ``counter``.

    The block counter wraps modulo 2**32, so inputs beyond 256 GiB are the
    caller's problem; envelope payloads never get near that.
    """
    if not data:
        # still validate arguments
        chacha20_block(key, counter, nonce)
        return b""
    if len(key) != 32:
        raise ValueError("key must be 32 bytes")
    if len(nonce) != 12:
        raise ValueError("nonce must be 12 bytes")
    k = struct.unpack("<8I", key)
    n = struct.unpack("<3I", nonce)
    nblocks = (len(data) + 63) // 64
    stream = bytearray()
    for i in range(nblocks):
        stream += _block_words(k, (counter + i) & _MASK, n)
    ks = int.from_bytes(stream[: len(data)], "little")
    return (int.from_bytes(data, "little") ^ ks).to_bytes(len(data), "little")


def poly1305_tag(key_material: bytes, message: bytes) -> bytes:
    """One-time authenticator over ``message`` with a 32-byte (r, s) key."""
    if len(key_material) != 32:
        raise ValueError("key material must be 32 bytes")
    r = int.from_bytes(key_material[:16], "little") & _CLAMP
    s = int.from_bytes(key_material[16:], "little")
    acc = 0
    for i in range(0, len(message), 16):
        chunk = message[i : i + 16]
        acc = (acc + int.from_bytes(chunk, "little") + (1 << (8 * len(chunk)))) * r % _P1305
    return ((acc + s) & ((1 << 128) - 1)).to_bytes(16, "little")
