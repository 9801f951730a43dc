# file: app/core/errors.py

from __future__ import annotations

from typing import Optional


class DesignsError(Exception):
    """
    Radice di tutti gli errori previsti dal progetto.
    main.py li intercetta e usa `exit_code` come codice di uscita.
    """

    exit_code: int = 3


# -------------------------
#  Errori di dominio (exit 1)
# -------------------------


class DomainError(DesignsError, ValueError):
    exit_code = 1


class NotPrime(DomainError):
    pass


class NotPrimitivePolynomial(DomainError):
    pass


class UnsupportedSize(DomainError):
    pass


class MixedFields(DomainError):
    pass


class DivisionByZero(DomainError):
    pass


class NotASubfield(DomainError):
    pass


class DivisionByZeroPoly(DomainError):
    pass


class MixedBase(DomainError):
    pass


class GeneratorDoesNotDivide(DomainError):
    pass


class NonCoprimeLength(DomainError):
    pass


class BadOrder(DomainError):
    pass


class UnsupportedField(DomainError):
    pass


class EvenMinimumDistance(DomainError):
    pass


class OutOfDomain(DomainError):
    pass


class StrengthTooLarge(DomainError):
    pass


class MixedBlockSizes(DomainError):
    pass


class StrengthNotBelowBlockSize(DomainError):
    pass


class StrengthBelowTwo(DomainError):
    pass


class DegenerateExponent(DomainError):
    pass


class InvalidBlock(DomainError):
    """Blocco con punti fuori da [0, v), dimensione sbagliata o ripetuto."""


# -------------------------
#  Budget (exit 2)
# -------------------------


class BudgetExceeded(DesignsError):
    exit_code = 2

    def __init__(self, required: int, budget: int, advice: str = "") -> None:
        self.required = required
        self.budget = budget
        self.advice = advice
        msg = f"Budget di enumerazione superato: servono {required} vettori, budget {budget}"
        if advice:
            msg += f". {advice}"
        super().__init__(msg)


# -------------------------
#  Incoerenze interne (exit 3)
# -------------------------


class InconsistencyError(DesignsError):
    exit_code = 3


class InconsistentInput(InconsistencyError):
    pass


class NonIntegralResult(InconsistencyError):
    pass


class InconsistentPair(InconsistencyError):
    pass


class NonIntegralLambda(InconsistencyError):
    pass


class NonIntegralDelta(InconsistencyError):
    pass


class SpectrumMismatch(InconsistencyError):
    def __init__(self, message: str, detail: Optional[dict] = None) -> None:
        self.detail = detail or {}
        super().__init__(message)
