from enum import Enum


class MatrixClass(str, Enum):
    """Constraint class placed on the pair during ratio maximization.

    ``TRACELESS_A`` constrains A only; ``TRACELESS_BOTH`` constrains A and B.
    """
    GENERAL = 'general'
    TRACELESS_A = 'traceless'
    NORMAL_A = 'normal'
    TRACELESS_BOTH = 'traceless-both'

    @property
    def traceless_a(self) -> bool:
        return self in (MatrixClass.TRACELESS_A, MatrixClass.TRACELESS_BOTH)

    @classmethod
    def from_str(cls, value: str) -> 'MatrixClass':
        for member in cls:
            if value.lower() in (member.value, member.name.lower()):
                return member
        raise ValueError(f"Invalid matrix class: {value}")


class EigenBackend(str, Enum):
    """Hermitian eigensolver implementation."""
    LAPACK = 'lapack'
    JACOBI = 'jacobi'

    @classmethod
    def from_str(cls, value: str) -> 'EigenBackend':
        if value.lower() == 'lapack':
            return cls.LAPACK
        elif value.lower() == 'jacobi':
            return cls.JACOBI
        else:
            raise ValueError(f"Invalid eigen backend: {value}")


class BoundRegime(str, Enum):
    """Theorem or conjecture a bound coefficient comes from."""
    GENERAL_NONPOSITIVE_Q = 'general_nonpositive_q'
    NORMAL_EITHER_POSITIVE_Q = 'normal_either_positive_q'
    TRACELESS_CONJECTURE_POSITIVE_Q = 'traceless_conjecture_positive_q'
    TRACELESS_CONJECTURE_NONPOSITIVE_Q = 'traceless_conjecture_nonpositive_q'
    # 1+q^2 drawn for reference only; general matrices exceed it for q > 0
    GENERAL_POSITIVE_Q_REFERENCE = 'general_positive_q_reference'
