"""
Django settings for pn_test_project, the project the petri_persistence
test suite runs in.
"""
import os

BASE_DIR = os.path.dirname(os.path.dirname(__file__))

SECRET_KEY = 'pn-test-project-not-a-secret'

DEBUG = True

ALLOWED_HOSTS = []

INSTALLED_APPS = (
    'petri_persistence',
    'django.contrib.contenttypes',
)

TEST_RUNNER = 'django.test.runner.DiscoverRunner'

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'pn_test_project.sqlite3'),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

# Analyses

PETRI_STATE_BUDGET = 1000000

PETRI_REQUIRE_EXACT = False

PETRI_COVERABILITY_MAX_VERTICES = 100000

PETRI_BASIS_MAX_ROUNDS = 10000

PETRI_POSTPONEMENT_CAP_FACTOR = 2

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'filters': {
        'net_context': {
            '()': 'petri_persistence.log.NetContextFilter'
        },
    },
    'formatters': {
        'simple': {
            'format': '%(levelname)-7s %(asctime)s %(message)s',
        },
        'net_context': {
            'format': '[%(net_name)s:%(analysis)s] '
                      '%(levelname)-7s %(asctime)s %(message)s',
        },
    },
    'handlers': {
        'null': {
            'class': 'logging.NullHandler',
        },
        'console': {
            'class': 'logging.StreamHandler',
            'filters': ['net_context'],
            'formatter': 'net_context',
        },
    },
    'loggers': {
        '': {
            'handlers': ['null'],
            'level': 'INFO',
            'propagate': True,
        },
    },
}
