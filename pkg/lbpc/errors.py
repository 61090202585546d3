# Exceptions raised across lbpc.
# MathematicalRejection -> the input is well formed but the claimed structure does not hold (cli exit 1)
# MalformedInput -> the input can not be interpreted at all (cli exit 2)

class LbpcError(Exception):
    kind = 'error'

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        out = {'error': self.kind, 'message': self.message}
        out.update(self.details)
        return out


class MathematicalRejection(LbpcError):
    kind = 'rejected'

class JacobiError(MathematicalRejection):
    kind = 'jacobi'

class CompatibilityError(MathematicalRejection):
    kind = 'compatibility'

class NotSubalgebraError(MathematicalRejection):
    kind = 'not_subalgebra'

class NotCoisotropicError(MathematicalRejection):
    kind = 'not_coisotropic'

class NotDirectSumError(MathematicalRejection):
    kind = 'not_direct_sum'

class NotManinTripleError(MathematicalRejection):
    kind = 'not_manin_triple'

class RepresentationError(MathematicalRejection):
    kind = 'representation'

class InvariantSubspaceError(MathematicalRejection):
    kind = 'not_invariant'

class ComplexError(MathematicalRejection):
    kind = 'd_squared_nonzero'

class InconsistentInputError(MathematicalRejection):
    kind = 'inconsistent_input'

class NotFiniteTypeError(MathematicalRejection):
    kind = 'not_finite_type'


class MalformedInput(LbpcError):
    kind = 'malformed'

class ShapeError(MalformedInput, ValueError):
    kind = 'shape'

class SchemaError(MalformedInput, ValueError):
    kind = 'schema'

    def __init__(self, message, pointer='', **details):
        super().__init__(message, pointer=pointer, **details)
        self.pointer = pointer

class UnknownTypeError(MalformedInput):
    kind = 'unknown_type'

class InputFileError(MalformedInput):
    kind = 'unreadable_file'

class NotSkewError(MalformedInput, ValueError):
    kind = 'not_skew'
