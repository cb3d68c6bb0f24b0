from enum import Enum


class ExperimentKind(Enum):
    EFFICIENCY = 'efficiency'
    BALANCED = 'balanced'
    UNBALANCED = 'unbalanced'


class Family(Enum):
    CHI_SQUARE_1 = 'chi_square_1'
    LAPLACE = 'laplace'
    LOG_NORMAL = 'log_normal'
    MIXTURE = 'mixture'
    MU = 'mu'
    NORMAL = 'normal'
    SINGH_MADDALA = 'singh_maddala'
    UNIFORM_01 = 'uniform_01'


class SchemeKind(Enum):
    DENSE_O = 'dense_o'
    DYADIC_STAR = 'dyadic_star'
    EXPLICIT = 'explicit'
    POWER_LAW = 'power_law'


class StatisticType(Enum):
    KS = 'ks'
    T = 't'
    W = 'w'


class StreamPurpose(Enum):
    NULL = 0
    ALTERNATIVE = 1
    SIZE_CHECK = 2


class TiePolicy(Enum):
    ERROR = 'error'
    RANDOM_BREAK = 'random_break'
