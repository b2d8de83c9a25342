default_app_config = 'petri_persistence.apps.PetriPersistenceConfig'
