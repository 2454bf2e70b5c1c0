import logging

from django.apps import (
    AppConfig,
)
from django.conf import (
    settings,
)


logger = logging.getLogger(__name__)


class RankedPackingConfig(AppConfig):
    name = 'ranked_packing'
    label = 'ranked_packing'
    verbose_name = 'Распределение ресурсов RU-DU упаковкой в полосу'

    def ready(self):
        """
        На момент готовности приложения выставляется детерминированный режим
        torch, если он включен в настройках проекта
        """
        options = getattr(settings, 'RANKED_PACKING', {})

        if options.get('DETERMINISTIC_TORCH'):
            from ranked_packing.nnet.models import (
                enable_deterministic_mode,
            )

            enable_deterministic_mode()

            logger.debug('Включен детерминированный режим torch')
