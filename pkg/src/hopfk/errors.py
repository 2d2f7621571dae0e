"""Exception hierarchy.

Two families matter to callers: ``InputError`` means the data handed in is
malformed or violates a structural axiom, ``VerdictError`` means the data is
fine but a mathematical property asked about does not hold.  The CLI maps
them to exit codes 2 and 1 respectively.
"""


class HopfkError(Exception):
    """Base class for every error raised by hopfk."""


class InputError(HopfkError):
    pass


class VerdictError(HopfkError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None, path=None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:{column or 1}:"
        super().__init__(f"{where} {message}" if where else message)


class FieldMismatch(InputError):
    pass


# -- algebras -------------------------------------------------------------

class NotAssociative(InputError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"(a{i} a{j}) a{k} != a{i} (a{j} a{k})")


class NoUnit(InputError):
    pass


class NotAModule(InputError):
    pass


class DimensionMismatch(InputError):
    pass


# -- hopf algebras ----------------------------------------------------------

class HopfAxiomError(InputError):
    """A Hopf or comodule axiom fails; the subclass names which one."""


class NotCoassociative(HopfAxiomError):
    pass


class CounitAxiomFails(HopfAxiomError):
    pass


class NotBialgebraMap(HopfAxiomError):
    pass


class AntipodeAxiomFails(HopfAxiomError):
    pass


class AntipodeSingular(HopfAxiomError):
    pass


class NotComoduleAlgebra(HopfAxiomError):
    pass


class NotAGroup(InputError):
    pass


class NotPrimitiveRoot(InputError):
    pass


class CocycleConditionFails(InputError):
    def __init__(self, g, h, l, which="cocycle"):
        self.triple = (g, h, l)
        super().__init__(f"{which} condition fails at (g, h, l) = ({g}, {h}, {l})")


class NotAutomorphism(InputError):
    def __init__(self, g, reason=""):
        self.g = g
        super().__init__(f"action of group element {g} is not a unital algebra automorphism"
                         + (f": {reason}" if reason else ""))


# -- randomized kernels -----------------------------------------------------

class Undecided(HopfkError):
    """A randomized search ran out of budget without a proof either way."""


class WedderburnSplitFailure(HopfkError):
    pass


class IterationBoundExceeded(HopfkError):
    pass


class VerificationFailed(HopfkError):
    """An explicit isomorphism certificate failed; signals a construction bug."""


# -- verdicts ---------------------------------------------------------------

class NotGalois(VerdictError):
    def __init__(self, message, defect=None, witness=None):
        self.defect = defect
        self.witness = witness
        super().__init__(message)


class NotProjective(VerdictError):
    pass


class NoSuchPQ(VerdictError):
    pass


class CartanNotInjective(VerdictError):
    pass


class RegularityNotDetected(VerdictError):
    pass


class BoundViolated(VerdictError):
    pass
