import io
import logging
from dataclasses import (
    asdict,
)
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Tuple,
    Union,
)

import torch

from ranked_packing.config import (
    NetConfig,
)
from ranked_packing.consts import (
    CHECKPOINT_SCHEMA_VERSION,
    PACKAGE_VERSION,
)
from ranked_packing.exceptions import (
    ConfigurationError,
    IncompatibleCheckpointError,
)
from ranked_packing.general import (
    Artifact,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.nnet.networks import (
    PolicyValueNet,
)
from ranked_packing.strings import (
    INCOMPATIBLE_CHECKPOINT_ERROR,
)
from ranked_packing.utils import (
    read_json,
    to_json,
)


logger = logging.getLogger(__name__)


def sidecar_path(path: Union[str, Path]) -> Path:
    """
    Путь JSON-описания контрольной точки: то же имя с расширением .json
    """
    return Path(path).with_suffix('.json')


def checkpoint_artifacts(
    path: Union[str, Path],
    model: PolicyValueModel,
    iteration: int,
    extra: Optional[Dict[str, Any]] = None,
) -> List[Artifact]:
    """
    Бинарные тензоры сети и JSON-описание: схема, конфигурация, размеры,
    итерация и дополнительные данные (буфер наград, состояние генератора)
    """
    buffer = io.BytesIO()
    torch.save(model.net.state_dict(), buffer)

    n_items, height, width = model.shape
    sidecar = {
        'schema_version': CHECKPOINT_SCHEMA_VERSION,
        'package_version': PACKAGE_VERSION,
        'config': asdict(model.config),
        'shape': {
            'n_items': n_items,
            'height': height,
            'width': width,
        },
        'iteration': iteration,
        'version': model.version,
    }
    sidecar.update(extra or {})

    return [
        Artifact(path=Path(path), content=buffer.getvalue()),
        Artifact.from_text(sidecar_path(path), to_json(sidecar)),
    ]


def read_sidecar(path: Union[str, Path]) -> Dict[str, Any]:
    sidecar = read_json(sidecar_path(path))

    found = sidecar.get('schema_version')
    if found != CHECKPOINT_SCHEMA_VERSION:
        raise IncompatibleCheckpointError(
            INCOMPATIBLE_CHECKPOINT_ERROR.format(
                path=path,
                found=found,
                expected=CHECKPOINT_SCHEMA_VERSION,
            )
        )

    return sidecar


def load_checkpoint(path: Union[str, Path]) -> Tuple[PolicyValueModel, Dict[str, Any]]:
    """
    Модель и JSON-описание контрольной точки.

    FileNotFoundError при отсутствии файлов, IncompatibleCheckpointError при
    другой версии схемы или несовпадении тензоров
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))

    sidecar = read_sidecar(path)

    try:
        config = NetConfig(**sidecar['config'])
        shape = sidecar['shape']
        net = PolicyValueNet(shape['n_items'], shape['height'], shape['width'], config)
    except (KeyError, TypeError, ConfigurationError) as exception:
        raise IncompatibleCheckpointError(str(exception))

    model = PolicyValueModel(net=net, config=config, version=int(sidecar.get('version', 0)))
    model.net.to(dtype=model.dtype)

    with open(path, 'rb') as f:
        state_dict = torch.load(io.BytesIO(f.read()), map_location='cpu')

    try:
        model.net.load_state_dict(state_dict)
    except RuntimeError as exception:
        raise IncompatibleCheckpointError(str(exception))

    model.net.eval()

    logger.debug('Загружена контрольная точка %s, итерация %s', path, sidecar.get('iteration'))

    return model, sidecar
