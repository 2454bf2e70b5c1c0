from dataclasses import (
    dataclass,
)

import pytest

from ranked_packing.caches import (
    ComputedValueCache,
    EntityCache,
)
from ranked_packing.decorators import (
    collect_errors,
)
from ranked_packing.errors import (
    IncompatibleCheckpointVersionError,
    InvalidArgumentsError,
    InvalidConfigError,
    MissingFileError,
    NonFiniteLossRunError,
    RunFailedError,
    UnknownSolverNameError,
    error_from_exception,
)
from ranked_packing.exceptions import (
    ConfigurationError,
    IncompatibleCheckpointError,
    InstanceError,
    NonFiniteLossError,
    OracleBudgetExceededError,
    UnknownSolverError,
)
from ranked_packing.functions import (
    LazySavingFunction,
)
from ranked_packing.general import (
    Artifact,
)
from ranked_packing.managers import (
    LazySavingRunnerManager,
)
from ranked_packing.results import (
    BaseRunnableResult,
)
from ranked_packing.runners import (
    LazyStrictSavingRunner,
)
from ranked_packing.utils import (
    derive_seed,
    spawn_generator,
)


@dataclass(frozen=True)
class _Entity:
    id: int
    group: str


class _WriteFileFunction(LazySavingFunction):
    """
    Функция, планирующая запись одного файла или завершающаяся ошибкой
    """

    def __init__(self, *args, path=None, fail=False, **kwargs):
        super().__init__(*args, **kwargs)

        self.path = path
        self.fail = fail

    @collect_errors
    def _prepare(self):
        if self.fail:
            raise InstanceError('broken')

        self.do_on_save(Artifact.from_text(self.path, str(self.helper.generator.integers(1000))))


class _WriteFilesRunner(LazyStrictSavingRunner):
    pass


class _WriteFilesManager(LazySavingRunnerManager):

    def _prepare_runner_class(self):
        return _WriteFilesRunner

    def _prepare_runner_kwargs(self, *args, paths=(), failing=(), **kwargs):
        return kwargs

    def _prepare_runner(self, *args, paths=(), failing=(), **kwargs):
        for index, path in enumerate(paths):
            self._runner.enqueue(
                _WriteFileFunction(path=path, fail=index in failing, seed=1, keys=(index, ))
            )


def test_entity_cache_lookup_by_id():
    cache = EntityCache([_Entity(1, 'a'), _Entity(2, 'b'), _Entity(2, 'c')])

    assert cache.get_by_key(2) == _Entity(2, 'b')
    assert cache.get_by_key(5) is None
    assert len(cache) == 3


def test_computed_value_cache_computes_once():
    calls = []

    def compute(key):
        calls.append(key)

        return key * 2

    cache = ComputedValueCache(compute)

    assert cache.get(3) == 6
    assert cache.get(3) == 6
    assert calls == [3]


def test_result_collects_nested_errors():
    inner = BaseRunnableResult()
    inner.append_entity(InvalidArgumentsError('bad'))
    outer = BaseRunnableResult()
    outer.append_entity(inner)
    outer.append_entity(RunFailedError('failed'))

    assert outer.has_errors
    assert [error.as_str() for error in outer.errors] == ['bad', 'failed']
    assert outer.first_error().exit_code == 2
    assert outer.results == [inner]


@pytest.mark.parametrize('exception, error_class, exit_code', [
    (InstanceError('x'), InvalidArgumentsError, 2),
    (FileNotFoundError('x'), MissingFileError, 3),
    (IncompatibleCheckpointError('x'), IncompatibleCheckpointVersionError, 4),
    (UnknownSolverError('x'), UnknownSolverNameError, 5),
    (OracleBudgetExceededError('x'), RunFailedError, 6),
    (NonFiniteLossError('x'), NonFiniteLossRunError, 7),
    (ConfigurationError('x'), InvalidConfigError, 8),
])
def test_exceptions_map_to_exit_codes(exception, error_class, exit_code):
    error = error_from_exception(exception)

    assert isinstance(error, error_class)
    assert error.exit_code == exit_code
    assert error.as_str() == 'x'


def test_function_generator_depends_on_seed_and_keys():
    first = _WriteFileFunction(seed=4, keys=(1, 2))
    second = _WriteFileFunction(seed=4, keys=(1, 2))
    other = _WriteFileFunction(seed=4, keys=(2, 1))

    assert first.helper.generator.integers(10 ** 9) == second.helper.generator.integers(10 ** 9)
    assert spawn_generator(4, 1, 2).integers(10 ** 9) != other.helper.generator.integers(10 ** 9)


def test_derive_seed_is_stable():
    assert derive_seed(0, 1, 2) == derive_seed(0, 1, 2)
    assert derive_seed(0, 1, 2) != derive_seed(0, 2, 1)


def test_strict_runner_writes_all_files(tmp_path):
    paths = [tmp_path / f'file_{index}.txt' for index in range(3)]

    manager = _WriteFilesManager()
    manager.run(paths=paths)

    assert manager.result.has_not_errors
    assert all(path.exists() for path in paths)


def test_strict_runner_writes_nothing_on_any_error(tmp_path):
    paths = [tmp_path / f'file_{index}.txt' for index in range(3)]

    manager = _WriteFilesManager()
    manager.run(paths=paths, failing=(1, ))

    assert manager.result.first_error().exit_code == 2
    assert not any(path.exists() for path in paths)


def test_process_pool_gives_same_files(tmp_path):
    sequential = [tmp_path / 'one' / f'file_{index}.txt' for index in range(4)]
    pooled = [tmp_path / 'pool' / f'file_{index}.txt' for index in range(4)]

    _WriteFilesManager().run(paths=sequential, jobs=1)
    _WriteFilesManager().run(paths=pooled, jobs=2)

    assert [path.read_text() for path in sequential] == [path.read_text() for path in pooled]
