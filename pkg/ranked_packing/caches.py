from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Hashable,
    Iterable,
    List,
    Optional,
    TypeVar,
)


_E = TypeVar('_E')
_V = TypeVar('_V')


class BaseCache:
    """
    Кеш-заглушка
    """

    def __init__(self, *args, **kwargs):
        super().__init__()


class EntityCache(BaseCache, Generic[_E]):
    """
    Базовый класс кеша объектов сущности.

    Объекты передаются итерируемым источником (сайты региона, DU). По
    идентификатору строится хеш-таблица для быстрого доступа.
    """

    def __init__(
        self,
        entities: Iterable[_E],
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)

        self._entities: List[_E] = list(entities)
        self._entities_hash_table: Dict[Any, _E] = {}

        for entity in self._entities:
            self._entities_hash_table.setdefault(entity.id, entity)

    def __repr__(self):
        return f'<{self.__class__.__name__} @count="{len(self._entities)}">'

    def __len__(self):
        return len(self._entities)

    def get_by_key(self, key: Any) -> Optional[_E]:
        """
        Объект по идентификатору или None. При повторе идентификатора
        остается первый объект
        """
        return self._entities_hash_table.get(key)


class ComputedValueCache(BaseCache, Generic[_V]):
    """
    Кеш лениво вычисляемых значений.

    Значение вычисляется функцией при первом обращении по ключу и
    переиспользуется в рамках работы запускаемого объекта. Например, минимальная
    высота точного решателя для экземпляра набора оценки.
    """

    def __init__(
        self,
        compute: Callable[[Hashable], _V],
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)

        self._compute = compute
        self._values: Dict[Hashable, _V] = {}

    def get(self, key: Hashable) -> _V:
        if key not in self._values:
            self._values[key] = self._compute(key)

        return self._values[key]
