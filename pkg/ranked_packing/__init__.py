default_app_config = 'ranked_packing.apps.RankedPackingConfig'
