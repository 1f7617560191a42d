"""Exception hierarchy.

Two families matter for callers: `InputError` means the caller handed us
something invalid (bad digits, non-generic parameters, a character that
factors through the norm), while `InternalCheckError` means a proved
identity failed to hold at runtime, i.e. a bug in this package.
`MismatchError` is raised by the cross-check harness when the closed-form
weight set and the brute-force enumeration disagree.
"""

from __future__ import annotations


class QuatWeightsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(QuatWeightsError):
    """Invalid caller-supplied data (maps to CLI exit code 2)."""


class NonGenericError(InputError):
    """Galois parameter digits violate the genericity bounds."""


class NotTypeOneError(InputError):
    """Character exponent is divisible by q+1, i.e. factors through the norm."""


class DigitRangeError(InputError):
    """A base-p digit fell outside [0, p-1]."""


class InadmissibleTupleError(InputError):
    """Bit tuple is not in the admissible collection of the given character."""


class StratumViolationError(InputError):
    """Requested stratum index is not below the parameter's stratum bound."""


class RelationViolationError(InputError):
    """A (w, d) pair violates the sign/parity relations of its family."""


class ConfigError(InputError):
    """Malformed CLI configuration file or flag combination."""


class InternalCheckError(QuatWeightsError):
    """A runtime self-check of a proved identity failed (maps to exit 1)."""


class OddCoefficientError(InternalCheckError):
    """Checked halving hit an odd coefficient; the integrality lemma broke."""


class ShapeViolationError(InternalCheckError):
    """Symbolic exponent does not have the proved linear/constant shape."""


class ConsistencyError(InternalCheckError):
    """Two internal routes to the same set disagreed."""


class MismatchError(QuatWeightsError):
    """Closed-form and brute-force weight sets differ (maps to exit 3).

    Carries the offending exponents and the full check report.
    """

    def __init__(self, report, context: str | None = None):
        self.report = report
        self.context = context
        only_theorem = list(getattr(report, "only_theorem", ()))
        only_oracle = list(getattr(report, "only_oracle", ()))
        problems = list(getattr(report, "certificate_problems", ()))
        parts = []
        if only_theorem:
            parts.append(f"only in closed form: {only_theorem}")
        if only_oracle:
            parts.append(f"only in brute force: {only_oracle}")
        if problems:
            parts.append(f"certificate problems: {problems}")
        if not parts:
            parts.append("count check failed")
        if context:
            parts.insert(0, context)
        super().__init__("; ".join(parts))
