"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class QuandlePosetError(Exception):
    """Base class for all errors raised by quandle_posets."""


class InputError(QuandlePosetError):
    """Malformed user input (files, builtin specs, arguments)."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class OrderTooLarge(QuandlePosetError):
    def __init__(self, n: int, cap: int, what: str = "enumeration"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} refused for n={n}: cap is {cap}")


# quandle axioms ------------------------------------------------------------

class QuandleAxiomError(QuandlePosetError):
    """A Cayley table violates one of the quandle axioms."""

    axiom = "quandle"

    @property
    def witness(self) -> tuple[int, ...]:
        return ()


class OutOfRange(QuandleAxiomError):
    axiom = "range"

    def __init__(self, i: int, j: int, value: int, n: int):
        self.i, self.j, self.value, self.n = i, j, value, n
        super().__init__(f"entry ({i},{j}) = {value} is outside [0,{n})")

    @property
    def witness(self) -> tuple[int, ...]:
        return (self.i, self.j)


class NotIdempotent(QuandleAxiomError):
    axiom = "idempotency"

    def __init__(self, i: int, value: int):
        self.i, self.value = i, value
        super().__init__(f"NotIdempotent({i}): {i}*{i} = {value}")

    @property
    def witness(self) -> tuple[int, ...]:
        return (self.i,)


class RightNotBijective(QuandleAxiomError):
    axiom = "right invertibility"

    def __init__(self, j: int):
        self.j = j
        super().__init__(f"RightNotBijective({j}): column {j} is not a permutation")

    @property
    def witness(self) -> tuple[int, ...]:
        return (self.j,)


class NotDistributive(QuandleAxiomError):
    axiom = "right self-distributivity"

    def __init__(self, i: int, j: int, k: int):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"NotDistributive({i},{j},{k}): ({i}*{j})*{k} != ({i}*{k})*({j}*{k})")

    @property
    def witness(self) -> tuple[int, ...]:
        return (self.i, self.j, self.k)


class NotAUnit(QuandlePosetError):
    def __init__(self, t: int, n: int):
        self.t, self.n = t, n
        super().__init__(f"NotAUnit({t},{n}): gcd({t},{n}) != 1")


# orders and topologies -----------------------------------------------------

class CycleDetected(QuandlePosetError):
    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"CycleDetected: {witness[0]} and {witness[1]} are related both ways")


class InvalidOrder(QuandlePosetError):
    """Relation matrix fails irreflexivity, antisymmetry or transitivity."""


class InvalidTopology(QuandlePosetError):
    """Family of sets is not closed under union/intersection."""


class NotT0(QuandlePosetError):
    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"NotT0: points {witness[0]} and {witness[1]} have the same open neighbourhoods")


# constructions ---------------------------------------------------------------

class WrongOrbitShape(QuandlePosetError):
    pass


class SingleOrbit(QuandlePosetError):
    pass


class XNotOdd(QuandlePosetError):
    def __init__(self, x: int, n: int):
        self.x, self.n = x, n
        super().__init__(f"XNotOdd: x={x} must be an odd residue in [1, {2 * n - 1}]")


class NotCoprime(QuandlePosetError):
    def __init__(self, m: int, n: int):
        self.m, self.n = m, n
        super().__init__(f"NotCoprime: gcd({m},{n}) != 1")
