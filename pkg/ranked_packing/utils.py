import json
import os
import tempfile
from pathlib import (
    Path,
)
from typing import (
    Any,
    Union,
)

import numpy as np


def to_json(data: Any) -> str:
    """
    Сериализация в JSON с фиксированным порядком ключей, чтобы одинаковые
    данные давали побайтно одинаковые файлы
    """
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def read_json(path: Union[str, Path]) -> Any:
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def atomic_write_bytes(
    path: Union[str, Path],
    content: bytes,
):
    """
    Запись файла через временный файл в том же каталоге и переименование
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fd, temp_path = tempfile.mkstemp(
        prefix=f'.{path.name}.',
        suffix='.tmp',
        dir=str(path.parent),
    )
    try:
        with os.fdopen(fd, 'wb') as f:
            f.write(content)

        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.unlink(temp_path)

        raise


def atomic_write_text(
    path: Union[str, Path],
    content: str,
):
    atomic_write_bytes(path, content.encode('utf-8'))


def spawn_generator(
    seed: int,
    *keys: int,
) -> np.random.Generator:
    """
    Независимый генератор для пары (seed, ключи).

    Используется для эпизодов и экземпляров, чтобы результат не зависел от
    порядка и параллельности их выполнения.
    """
    return np.random.default_rng(
        np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, *keys]),
    )


def derive_seed(
    seed: int,
    *keys: int,
) -> int:
    """
    Производный 63-битный seed для пары (seed, ключи)
    """
    return int(spawn_generator(seed, *keys).integers(0, 2 ** 63 - 1))
