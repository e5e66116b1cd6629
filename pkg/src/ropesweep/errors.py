"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: input errors -> 2, resource limits -> 3,
invariant violations -> 4.
"""

from __future__ import annotations


class RopeSweepError(Exception):
    """Base class for all library errors."""


class InputError(RopeSweepError, ValueError):
    """Malformed or invalid user input."""


class WrongSwapCount(InputError):
    def __init__(self, n: int, got: int):
        self.n = n
        self.got = got
        super().__init__(
            f"arrangement of {n} pseudolines needs {n * (n - 1) // 2} swaps, got {got}"
        )


class RepeatedCrossing(InputError):
    def __init__(self, step: int, pair: tuple[int, int]):
        self.step = step
        self.pair = pair
        super().__init__(f"swap at step {step} crosses pseudolines {pair} a second time")


class PositionOutOfRange(InputError):
    def __init__(self, step: int, position: int, n: int):
        self.step = step
        self.position = position
        super().__init__(f"swap position {position} at step {step} not in [1, {n - 1}]")


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class ResourceLimit(RopeSweepError):
    """A configured count or time budget was exceeded."""


class InvariantViolation(RopeSweepError):
    """An internal consistency check failed; indicates a bug."""

    def __init__(self, message: str, step: int | None = None):
        self.step = step
        super().__init__(message if step is None else f"step {step}: {message}")


class FlipError(RopeSweepError, ValueError):
    """A flip was requested whose precondition does not hold."""


class BottomChainNotOnRope(FlipError):
    pass


class NotInnerFace(FlipError):
    pass


class PreconditionNotMet(FlipError):
    pass


class TerminalVertex(FlipError):
    pass


class CrossingError(RopeSweepError, ValueError):
    """A rope and dual rope do not cross exactly once."""


class NoCrossing(CrossingError):
    pass


class MultipleCrossings(CrossingError):
    pass


class NotADownSet(RopeSweepError, ValueError):
    pass


class TooLarge(RopeSweepError, ValueError):
    pass


class NotAcyclic(InputError):
    pass


class DegenerateInput(InputError):
    def __init__(self, message: str, element: object):
        self.element = element
        super().__init__(message)
