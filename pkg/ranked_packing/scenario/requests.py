from dataclasses import (
    replace,
)
from typing import (
    Iterable,
    List,
    Optional,
)

import numpy as np

from ranked_packing.caches import (
    EntityCache,
)
from ranked_packing.packing.instances import (
    Instance,
    make_instance,
)
from ranked_packing.scenario.sites import (
    DUSite,
    Site,
    check_hour,
)


class SitesCache(EntityCache[Site]):
    """
    Кеш сайтов RU региона с поиском по id
    """

    def connected_to(self, du: DUSite) -> List[Site]:
        """
        Подключенные к DU сайты в порядке connected_rus
        """
        return [self.get_by_key(site_id) for site_id in du.connected_rus]


def sample_site_request(
    site: Site,
    hour: int,
    t_max: int,
    capacity: int,
    generator: np.random.Generator,
):
    """
    Запрос RU в заданный час: h равномерно из [max(1, round(mu - delta)),
    round(mu + delta)] с ограничением емкостью, w равномерно из [1, T']
    """
    mu = site.mu_at(hour)
    low = max(1, int(round(mu - site.delta_cpu)))
    high = max(low, int(round(mu + site.delta_cpu)))

    h = min(int(generator.integers(low, high + 1)), capacity)
    w = int(generator.integers(1, t_max + 1))

    return w, h


def sample_requests(
    du: DUSite,
    sites: Iterable[Site],
    hour: int,
    seed: int,
    name: str = '',
    cache: Optional[SitesCache] = None,
) -> Instance:
    """
    Экземпляр задачи DU в заданный час: по одному запросу от каждого
    подключенного RU. Виртуальная высота равна емкости DU
    """
    check_hour(hour)

    cache = cache if cache is not None else SitesCache(sites)
    generator = np.random.default_rng(seed)

    sizes = [
        sample_site_request(site, hour, du.t_max, du.capacity, generator)
        for site in cache.connected_to(du)
    ]

    instance = make_instance(sizes, w_star=du.w_star, seed=seed, height=du.capacity)

    return replace(instance, name=name or f'{du.label}_h{hour:02d}')
