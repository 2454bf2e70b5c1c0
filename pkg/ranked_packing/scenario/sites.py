import logging
from dataclasses import (
    dataclass,
    field,
    replace,
)
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
import pandas as pd

from ranked_packing.config import (
    ScenarioConfig,
)
from ranked_packing.consts import (
    ARTIFACT_SCHEMA_VERSION,
    DEFAULT_CONNECTED_RUS,
    HOURS_PER_DAY,
    PEAK_HOUR,
)
from ranked_packing.exceptions import (
    ConfigurationError,
)
from ranked_packing.scenario.latency import (
    LatencyModel,
    fronthaul_latency,
)
from ranked_packing.strings import (
    HOUR_RANGE_ERROR,
    LATENCY_VIOLATION_WARNING,
    NOT_ENOUGH_SITES_ERROR,
    SITE_PARAMETERS_ERROR,
)
from ranked_packing.utils import (
    read_json,
    to_json,
)


logger = logging.getLogger(__name__)

# Ширина пика суточной нагрузки, часов
LOAD_PEAK_WIDTH = 3.0

# Доля пиковой нагрузки в ночные часы
LOAD_TROUGH_LEVEL = 0.3

# Нижняя граница случайного множителя почасовой нагрузки
LOAD_JITTER_MIN = 0.9

LOAD_COLUMNS = tuple(f'load_{hour:02d}' for hour in range(HOURS_PER_DAY))
SITE_COLUMNS = ('id', 'x_km', 'y_km', 'mu_cpu', 'delta_cpu')


def check_hour(hour: int):
    if not 0 <= hour < HOURS_PER_DAY:
        raise ConfigurationError(HOUR_RANGE_ERROR.format(hour=hour))


@dataclass(frozen=True)
class Site:
    """
    Сайт RU: положение, среднее mu и разброс delta требований CPU и
    необязательный суточный профиль средней нагрузки
    """
    id: int
    x_km: float
    y_km: float
    mu_cpu: float
    delta_cpu: float
    load_curve: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if self.mu_cpu <= 0 or self.delta_cpu < 0 or self.mu_cpu - self.delta_cpu < 1:
            raise ConfigurationError(
                SITE_PARAMETERS_ERROR.format(site_id=self.id, mu=self.mu_cpu, delta=self.delta_cpu)
            )

    def mu_at(self, hour: int) -> float:
        """
        Среднее требование CPU в заданный час
        """
        check_hour(hour)

        return self.load_curve[hour] if self.load_curve else self.mu_cpu

    def as_dict(self) -> Dict[str, Any]:
        data = {
            'id': self.id,
            'x_km': self.x_km,
            'y_km': self.y_km,
            'mu_cpu': self.mu_cpu,
            'delta_cpu': self.delta_cpu,
        }
        if self.load_curve:
            data['load_curve'] = list(self.load_curve)

        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Site':
        load_curve = data.get('load_curve')

        return cls(
            id=int(data['id']),
            x_km=float(data['x_km']),
            y_km=float(data['y_km']),
            mu_cpu=float(data['mu_cpu']),
            delta_cpu=float(data['delta_cpu']),
            load_curve=tuple(float(value) for value in load_curve) if load_curve else None,
        )


@dataclass(frozen=True)
class DUSite:
    """
    DU: положение, емкость C (виртуальная высота H'), граница времени
    обработки T', бюджет задержки W* и подключенные RU
    """
    id: int
    x_km: float
    y_km: float
    capacity: int = 15
    t_max: int = 8
    w_star: int = 15
    connected_rus: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def label(self) -> str:
        return f'du{self.id}'

    def as_dict(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'x_km': self.x_km,
            'y_km': self.y_km,
            'capacity': self.capacity,
            't_max': self.t_max,
            'w_star': self.w_star,
            'connected_rus': list(self.connected_rus),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'DUSite':
        return cls(
            id=int(data['id']),
            x_km=float(data['x_km']),
            y_km=float(data['y_km']),
            capacity=int(data.get('capacity', 15)),
            t_max=int(data.get('t_max', 8)),
            w_star=int(data.get('w_star', 15)),
            connected_rus=tuple(int(site_id) for site_id in data.get('connected_rus', ())),
        )


@dataclass(frozen=True)
class Region:
    """
    Регион сценария: сайты RU, DU и размеры области
    """
    sites: Tuple[Site, ...]
    dus: Tuple[DUSite, ...]
    extent_km: Tuple[float, float] = (14.0, 13.0)
    seed: int = 0

    def as_dict(self) -> Dict[str, Any]:
        return {
            'schema_version': ARTIFACT_SCHEMA_VERSION,
            'sites': [site.as_dict() for site in self.sites],
            'dus': [du.as_dict() for du in self.dus],
            'extent_km': list(self.extent_km),
            'seed': self.seed,
        }

    def dumps(self) -> str:
        return to_json(self.as_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Region':
        try:
            return cls(
                sites=tuple(Site.from_dict(site) for site in data['sites']),
                dus=tuple(DUSite.from_dict(du) for du in data['dus']),
                extent_km=tuple(float(side) for side in data.get('extent_km', (14.0, 13.0))),
                seed=int(data.get('seed', 0)),
            )
        except (KeyError, TypeError, ValueError) as exception:
            raise ConfigurationError(str(exception))


def read_region(path: Union[str, Path]) -> Region:
    return Region.from_dict(read_json(path))


def synthetic_load_curve(
    mu_peak: float,
    delta: float,
    generator: np.random.Generator,
    peak_hour: int = PEAK_HOUR,
) -> Tuple[float, ...]:
    """
    Суточный профиль средней нагрузки: пик в peak_hour, спад к ночи, случайный
    множитель из [0.9, 1] во все часы кроме пика. Значения не ниже 1 + delta
    """
    hours = np.arange(HOURS_PER_DAY)
    distance = np.abs(hours - peak_hour)
    distance = np.minimum(distance, HOURS_PER_DAY - distance)

    shape = LOAD_TROUGH_LEVEL + (1 - LOAD_TROUGH_LEVEL) * np.exp(
        -(distance ** 2) / (2 * LOAD_PEAK_WIDTH ** 2)
    )
    jitter = generator.uniform(LOAD_JITTER_MIN, 1.0, size=HOURS_PER_DAY)
    jitter[peak_hour] = 1.0

    curve = np.maximum(mu_peak * shape * jitter, 1 + delta)

    return tuple(round(float(value), 6) for value in curve)


def connect_rus(
    du: DUSite,
    sites: Sequence[Site],
    k: int = DEFAULT_CONNECTED_RUS,
    latency_model: LatencyModel = LatencyModel(),
) -> DUSite:
    """
    Подключение k ближайших RU к DU, при равных расстояниях по меньшему id.

    Подключения с задержкой выше границы фронтхола не отбрасываются, о них
    выводится предупреждение.
    """
    if len(sites) < k:
        raise ConfigurationError(NOT_ENOUGH_SITES_ERROR.format(k=k, available=len(sites)))

    distances = {
        site.id: float(np.hypot(site.x_km - du.x_km, site.y_km - du.y_km))
        for site in sites
    }
    selected = sorted(distances, key=lambda site_id: (distances[site_id], site_id))[:k]

    violators = [
        site_id
        for site_id in selected
        if fronthaul_latency(distances[site_id], latency_model) > latency_model.bound
    ]
    if violators:
        logger.warning(LATENCY_VIOLATION_WARNING, du.id, latency_model.bound * 1e6, violators)

    return replace(du, connected_rus=tuple(selected))


def place_dus(
    sites: Sequence[Site],
    n_dus: int,
    extent_km: Tuple[float, float],
    generator: np.random.Generator,
    config: ScenarioConfig,
) -> List[DUSite]:
    """
    Равномерные положения DU в области и подключение ближайших RU
    """
    if len(sites) < config.connected_rus:
        raise ConfigurationError(
            NOT_ENOUGH_SITES_ERROR.format(k=config.connected_rus, available=len(sites))
        )

    width_km, height_km = extent_km
    latency_model = LatencyModel(reduction_factor=config.reduction_factor)
    dus = []
    for du_id in range(n_dus):
        x_km, y_km = generator.uniform((0, 0), (width_km, height_km))
        du = DUSite(
            id=du_id,
            x_km=round(float(x_km), 6),
            y_km=round(float(y_km), 6),
            capacity=config.capacity,
            t_max=config.t_max,
            w_star=config.w_star,
        )
        dus.append(connect_rus(du, sites, k=config.connected_rus, latency_model=latency_model))

    return dus


def region_from_sites(
    sites: Sequence[Site],
    n_dus: int = 10,
    extent_km: Tuple[float, float] = (14.0, 13.0),
    seed: int = 0,
    config: Optional[ScenarioConfig] = None,
) -> Region:
    """
    Регион из заданных сайтов RU (например, из CSV) с синтетическим
    размещением DU
    """
    config = config if config is not None else ScenarioConfig()

    return Region(
        sites=tuple(sites),
        dus=tuple(place_dus(sites, n_dus, extent_km, np.random.default_rng(seed), config)),
        extent_km=(float(extent_km[0]), float(extent_km[1])),
        seed=seed,
    )


def generate_synthetic_region(
    n_sites: int = 100,
    n_dus: int = 10,
    extent_km: Tuple[float, float] = (14.0, 13.0),
    seed: int = 0,
    config: Optional[ScenarioConfig] = None,
) -> Region:
    """
    Синтетический регион: равномерные положения сайтов и DU в области,
    профили нагрузки с вечерним пиком и подключение ближайших RU к каждому DU
    """
    config = config if config is not None else ScenarioConfig()
    if n_sites < config.connected_rus:
        raise ConfigurationError(
            NOT_ENOUGH_SITES_ERROR.format(k=config.connected_rus, available=n_sites)
        )

    generator = np.random.default_rng(seed)
    width_km, height_km = extent_km

    sites: List[Site] = []
    for site_id in range(n_sites):
        x_km, y_km = generator.uniform((0, 0), (width_km, height_km))
        mu_cpu = float(generator.uniform(config.mu_min, config.mu_max))
        delta_cpu = float(generator.integers(0, config.delta_max + 1))

        sites.append(
            Site(
                id=site_id,
                x_km=round(float(x_km), 6),
                y_km=round(float(y_km), 6),
                mu_cpu=round(mu_cpu, 6),
                delta_cpu=delta_cpu,
                load_curve=synthetic_load_curve(mu_cpu, delta_cpu, generator, config.peak_hour),
            )
        )

    dus = place_dus(sites, n_dus, extent_km, generator, config)

    return Region(
        sites=tuple(sites),
        dus=tuple(dus),
        extent_km=(float(width_km), float(height_km)),
        seed=seed,
    )


def sites_frame(sites: Sequence[Site]) -> pd.DataFrame:
    """
    Таблица сайтов: id, x_km, y_km, mu_cpu, delta_cpu и почасовые колонки
    нагрузки, если профили заданы у всех сайтов
    """
    rows = []
    with_curves = all(site.load_curve for site in sites) and bool(sites)
    for site in sites:
        row = {column: getattr(site, column) for column in SITE_COLUMNS}
        if with_curves:
            row.update(zip(LOAD_COLUMNS, site.load_curve))
        rows.append(row)

    return pd.DataFrame(rows, columns=list(SITE_COLUMNS) + (list(LOAD_COLUMNS) if with_curves else []))


def read_sites_csv(path: Union[str, Path]) -> List[Site]:
    frame = pd.read_csv(path)

    missing = [column for column in SITE_COLUMNS if column not in frame.columns]
    if missing:
        raise ConfigurationError(f'{path}: {", ".join(missing)}')

    with_curves = all(column in frame.columns for column in LOAD_COLUMNS)

    return [
        Site(
            id=int(row['id']),
            x_km=float(row['x_km']),
            y_km=float(row['y_km']),
            mu_cpu=float(row['mu_cpu']),
            delta_cpu=float(row['delta_cpu']),
            load_curve=(
                tuple(float(row[column]) for column in LOAD_COLUMNS)
                if with_curves else
                None
            ),
        )
        for row in frame.to_dict(orient='records')
    ]
