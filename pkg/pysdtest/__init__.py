import logging

__version__ = '1.0.0'

from pysdtest.sdtest_object import SdtestObject  # noqa: E402
from pysdtest.enumerations import ExperimentKind  # noqa: E402
from pysdtest.enumerations import Family  # noqa: E402
from pysdtest.enumerations import SchemeKind  # noqa: E402
from pysdtest.enumerations import StatisticType  # noqa: E402
from pysdtest.enumerations import StreamPurpose  # noqa: E402
from pysdtest.enumerations import TiePolicy  # noqa: E402
from pysdtest.exceptions import SdtestBudgetException  # noqa: E402
from pysdtest.exceptions import SdtestConfigurationException  # noqa: E402
from pysdtest.exceptions import SdtestDomainException  # noqa: E402
from pysdtest.exceptions import SdtestException  # noqa: E402
from pysdtest.exceptions import SdtestInsufficientReplicatesException  # noqa: E402
from pysdtest.exceptions import SdtestNotInAlternativeException  # noqa: E402
from pysdtest.exceptions import SdtestParseException  # noqa: E402
from pysdtest.exceptions import SdtestSimulationException  # noqa: E402
from pysdtest.exceptions import SdtestTieException  # noqa: E402
from pysdtest.objects.alternative_pair import AlternativePair  # noqa: E402
from pysdtest.objects.contamination_path import ContaminationPath  # noqa: E402
from pysdtest.objects.continuous_distribution import ContinuousDistribution  # noqa: E402
from pysdtest.objects.critical_value_table import CriticalValueEntry  # noqa: E402
from pysdtest.objects.critical_value_table import CriticalValueTable  # noqa: E402
from pysdtest.objects.efficiency_report import EfficiencyReport  # noqa: E402
from pysdtest.objects.exact_null_distribution import Atom  # noqa: E402
from pysdtest.objects.exact_null_distribution import ExactNullDistribution  # noqa: E402
from pysdtest.objects.experiment_config import ExperimentConfig  # noqa: E402
from pysdtest.objects.partition_scheme import PartitionScheme  # noqa: E402
from pysdtest.objects.power_estimate import PowerEstimate  # noqa: E402
from pysdtest.objects.rank_vector import RankVector  # noqa: E402
from pysdtest.objects.sample_ratio_estimate import SampleRatioEstimate  # noqa: E402
from pysdtest.objects.simulation_plan import SimulationPlan  # noqa: E402
from pysdtest.objects.slope_estimate import SlopeEstimate  # noqa: E402
from pysdtest.objects.statistic_kind import StatisticKind  # noqa: E402
from pysdtest.objects.two_sample import TwoSample  # noqa: E402
from pysdtest.alternatives import Alternatives  # noqa: E402
from pysdtest.statistics import Statistics  # noqa: E402
from pysdtest.efficiency import Efficiency  # noqa: E402
from pysdtest.oracle import Oracle  # noqa: E402
from pysdtest.montecarlo import MonteCarloService  # noqa: E402
from pysdtest.utilities import Utilities  # noqa: E402

logging.getLogger(__name__).addHandler(logging.NullHandler())
