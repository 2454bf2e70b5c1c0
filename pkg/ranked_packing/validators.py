from ranked_packing.errors import (
    InvalidArgumentsError,
)
from ranked_packing.packing.instances import (
    validate_instance,
)


class BaseValidator:
    """
    Базовый класс для создания валидатора
    """

    def __init__(self, *args, **kwargs):
        super().__init__()

    def validate(self, runnable):
        """
        Точка входа работы валидатора.

        Результат валидации должен быть записан в runnable.result
        """


class InstanceValidator(BaseValidator):
    """
    Проверка экземпляра запускаемого объекта на соответствие инвариантам
    предметов с учетом виртуальной высоты H'
    """

    def validate(self, runnable):
        instance = getattr(runnable, 'instance', None)
        if instance is None:
            return

        try:
            validate_instance(instance, height=runnable.height)
        except ValueError as exception:
            runnable.result.append_entity(InvalidArgumentsError(str(exception)))
