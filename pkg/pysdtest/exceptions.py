class SdtestException(Exception):
    pass


class SdtestBudgetException(SdtestException):
    attribute_type_map = {'size': 'int', 'budget': 'int'}

    def __init__(self, message, size, budget):
        super(SdtestBudgetException, self).__init__(message)

        self._size = size
        self._budget = budget

    @property
    def size(self):
        return self._size

    @property
    def budget(self):
        return self._budget


class SdtestConfigurationException(SdtestException):
    attribute_type_map = {'key': 'str'}

    def __init__(self, message, key=None):
        super(SdtestConfigurationException, self).__init__(message)

        self._key = key

    @property
    def key(self):
        return self._key


class SdtestDomainException(SdtestException):
    attribute_type_map = {'value': 'float'}

    def __init__(self, message, value):
        super(SdtestDomainException, self).__init__(message)

        self._value = value

    @property
    def value(self):
        return self._value


class SdtestInsufficientReplicatesException(SdtestException):
    attribute_type_map = {'replicates': 'int', 'alpha': 'float'}

    def __init__(self, message, replicates, alpha):
        super(SdtestInsufficientReplicatesException, self).__init__(message)

        self._replicates = replicates
        self._alpha = alpha

    @property
    def replicates(self):
        return self._replicates

    @property
    def alpha(self):
        return self._alpha


class SdtestNotInAlternativeException(SdtestException):
    attribute_type_map = {'sup_abar': 'float'}

    def __init__(self, message, sup_abar):
        super(SdtestNotInAlternativeException, self).__init__(message)

        self._sup_abar = sup_abar

    @property
    def sup_abar(self):
        return self._sup_abar


class SdtestParseException(SdtestException):
    attribute_type_map = {'file_name': 'str', 'line_number': 'int'}

    def __init__(self, message, file_name, line_number):
        super(SdtestParseException, self).__init__(message)

        self._file_name = file_name
        self._line_number = line_number

    @property
    def file_name(self):
        return self._file_name

    @property
    def line_number(self):
        return self._line_number


class SdtestSimulationException(SdtestException):
    attribute_type_map = {'completed_cells': 'List[str]'}

    def __init__(self, message, completed_cells):
        super(SdtestSimulationException, self).__init__(message)

        self._completed_cells = list(completed_cells)

    @property
    def completed_cells(self):
        return self._completed_cells


class SdtestTieException(SdtestException):
    attribute_type_map = {'value': 'float'}

    def __init__(self, message, value):
        super(SdtestTieException, self).__init__(message)

        self._value = value

    @property
    def value(self):
        return self._value
