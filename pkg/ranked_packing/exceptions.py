class RankedPackingException(Exception):
    """
    Базовое исключение пакета
    """


class InstanceError(RankedPackingException, ValueError):
    """
    Экземпляр задачи упаковки нарушает инварианты
    """


class InfeasibleAllocationError(RankedPackingException, ValueError):
    """
    Недостаточно свободных строк под предметом ниже H'
    """


class IllegalActionError(RankedPackingException, ValueError):
    """
    Действие отсутствует среди допустимых в текущем состоянии
    """


class DeadStateError(RankedPackingException, ValueError):
    """
    Запрошена величина, не определенная для тупикового состояния
    """


class OracleInfeasibleError(RankedPackingException):
    """
    Точный решатель не нашел полной упаковки под заданным ограничением высоты
    """


class OracleBudgetExceededError(RankedPackingException):
    """
    Точный решатель исчерпал лимит узлов
    """


class NonFiniteLossError(RankedPackingException, ArithmeticError):
    """
    Функция потерь или градиент приняли неконечное значение
    """


class IncompatibleCheckpointError(RankedPackingException):
    """
    Контрольная точка несовместима с текущей версией схемы или конфигурацией
    """


class ConfigurationError(RankedPackingException, ValueError):
    """
    Ошибка конфигурации запуска
    """


class UnknownSolverError(RankedPackingException, KeyError):
    """
    Запрошен незарегистрированный решатель
    """

    def __str__(self):
        return str(self.args[0]) if self.args else ''
