"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 1 for bad input, 2 for a
mathematical obstruction, 3 for an internal consistency failure.
"""


class BHCRError(Exception):
    exit_code = 1


class InputError(BHCRError):
    exit_code = 1


class ObstructionError(BHCRError):
    exit_code = 2


class InternalError(BHCRError):
    exit_code = 3


# parsing / construction of potentials
class ParseError(InputError):
    pass


class NonSquare(ParseError):
    pass


class DuplicateMonomial(ParseError):
    pass


class NegativeOrMalformedExponent(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class SingularMatrix(InputError):
    pass


class DimensionMismatch(InputError):
    pass


# weights
class NonPositiveCharge(ObstructionError):
    pass


class NonCalabiYau(ObstructionError):
    pass


# groups
class EnumerationCapExceeded(ObstructionError):
    pass


class NotAMember(InputError):
    pass


class NotASubgroup(InputError):
    pass


class OrderFormulaMismatch(InternalError):
    pass


# twist construction
class NotCoprime(ObstructionError):
    pass


class FirstMonomialNotPureSquare(ObstructionError):
    pass


class WeightObstruction(ObstructionError):
    pass


class NotCalabiYauFactor(ObstructionError):
    pass


class TransposedGcdObstruction(ObstructionError):
    pass


# splitting isomorphism
class NoDeterminantOneRepresentative(InternalError):
    pass


class NotInImage(InternalError):
    pass


# Nikulin triples
class ParityViolation(ObstructionError):
    pass


class ExceptionalTriple(ObstructionError):
    pass


class OutOfRange(ObstructionError):
    pass


class MirrorUndefined(ObstructionError):
    pass


# fixture verification
class RowMismatch(InternalError):
    pass
