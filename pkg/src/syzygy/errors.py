"""Exception types shared across the package."""


class SyzygyError(Exception):
    pass


class MonomialError(SyzygyError, ValueError):
    pass


class NotMinimal(SyzygyError):
    def __init__(self, divisor, multiple):
        self.divisor = divisor
        self.multiple = multiple
        super().__init__(f"generator {divisor} divides generator {multiple}")


class NotLinearQuotients(SyzygyError):
    """Colon ideal at step ``i`` is not generated by variables; ``k`` witnesses it."""

    def __init__(self, i, k):
        self.i = i
        self.k = k
        super().__init__(
            f"colon ideal at generator {i} is not variable-generated "
            f"(cofactor of generator {k} has no linear divisor)"
        )


class NotInIdeal(SyzygyError):
    pass


class InternalNonUnique(SyzygyError):
    pass


class NotCritMonotone(SyzygyError):
    def __init__(self, j, i):
        self.j = j
        self.i = i
        super().__init__(f"crit(nf(x{i} g_{j})) is not contained in crit(g_{j})")


class ExchangeFailure(SyzygyError):
    def __init__(self, b1, b2, x):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(
            f"basis exchange fails for B1={sorted(b1)}, B2={sorted(b2)}, x={x}"
        )


class NotStable(SyzygyError):
    def __init__(self, u, j):
        self.u, self.j = u, j
        super().__init__(f"ideal is not stable: move x{j} on {u} leaves the ideal")


class RecursionLimitExceeded(SyzygyError):
    pass


class ExactnessFailure(SyzygyError):
    def __init__(self, alpha, degree, detail=""):
        self.alpha, self.degree = alpha, degree
        super().__init__(f"strand {alpha} not exact in degree {degree} {detail}".rstrip())


class HomotopyFailure(SyzygyError):
    def __init__(self, witness, identity):
        self.witness, self.identity = witness, identity
        super().__init__(f"{identity} fails on {witness}")
