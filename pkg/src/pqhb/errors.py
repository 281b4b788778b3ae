"""Exception hierarchy shared by every subsystem.

Callers that want a single catch-all can handle :class:`PqhbError`; the CLI
maps it to exit code 1.
"""

from __future__ import annotations


class PqhbError(Exception):
    """Base class for all errors raised by this package."""


# --- envelope codec -----------------------------------------------------


class WireError(PqhbError):
    """Base class for envelope encoding/decoding failures."""


class UnknownVersion(WireError):
    """Envelope carries a version byte this codec does not speak."""


class UnknownScheme(WireError):
    """Envelope carries a scheme tag outside the supported set."""


class LengthMismatch(WireError):
    """A declared or implied field length disagrees with the scheme constants
    or the buffer is truncated."""


class PayloadTooShort(WireError):
    """Envelope payload is shorter than the 16-byte authentication tag."""


# --- key encapsulation --------------------------------------------------


class KemError(PqhbError):
    """Base class for key-encapsulation failures."""


class EntropyFailure(KemError):
    """The injected entropy source failed or returned malformed output."""


class BackendFailure(KemError):
    """A required cryptographic backend is unavailable or rejected the
    operation (e.g. prime search gave up, ML-KEM provider missing)."""


class MalformedPublicKey(KemError):
    """Public key bytes do not parse as a valid key for the scheme."""


class MissingSenderKey(KemError):
    """P-384 operations need the sender's keypair/public key and none was
    supplied."""


class EncapsulationFailure(KemError):
    """Encapsulation toward the recipient public key failed."""


class MalformedTransport(KemError):
    """Key-transport bytes have the wrong length for the scheme."""


class DecapsulationFailure(KemError):
    """Key transport could not be opened.

    For RSA-OAEP this is deliberately uniform: padding failures and all
    other decode failures raise the same error with the same message.
    """


# --- data encapsulation ---------------------------------------------------


class DemError(PqhbError):
    """Base class for AEAD failures."""


class AuthFailure(DemError):
    """Authentication tag mismatch: ciphertext was tampered with or the
    key/nonce/aad is wrong."""


class TooShort(DemError):
    """Sealed input is shorter than the 16-byte tag."""


# --- hybrid engine --------------------------------------------------------


class SchemeMismatch(PqhbError):
    """Envelope scheme does not match the engine's scheme."""


# --- benchmark ingestion and reporting ------------------------------------


class BenchError(PqhbError):
    """Base class for measurement/ingestion failures."""


class ParseError(BenchError):
    """An event record is malformed; carries the offending row index."""

    def __init__(self, row: int, reason: str):
        super().__init__(f"row {row}: {reason}")
        self.row = row


class NegativeCount(BenchError):
    """An event counter was negative."""


class ReportError(PqhbError):
    """Base class for report-construction failures."""


class MissingBaseline(ReportError):
    """No baseline row exists for an (operation, arch) group being compared."""


class MixedUnits(ReportError):
    """A comparison group mixes estimated cycles with wall-clock samples."""
