import importlib
import os

from django.test import SimpleTestCase, override_settings
from mock import patch

from petri_persistence.apps import analysis_settings


def ids(messages):
    return [m.id for m in messages]


class AnalysisSettingsCheckTests(SimpleTestCase):

    def run_check(self, environ=None):
        env = {'PETRI_STATE_BUDGET': ''}
        env.update(environ or {})
        with patch.dict(os.environ, env):
            return analysis_settings(None)

    @override_settings(PETRI_STATE_BUDGET=1000000, PETRI_COVERABILITY_MAX_VERTICES=100,
                       PETRI_BASIS_MAX_ROUNDS=100, PETRI_POSTPONEMENT_CAP_FACTOR=2)
    def test_valid_settings(self):
        self.assertEqual(self.run_check(), [])

    @override_settings(PETRI_STATE_BUDGET=0)
    def test_non_positive_budget(self):
        self.assertIn('petri_persistence.E001', ids(self.run_check()))

    @override_settings(PETRI_STATE_BUDGET=True)
    def test_boolean_budget(self):
        self.assertIn('petri_persistence.E001', ids(self.run_check()))

    @override_settings(PETRI_COVERABILITY_MAX_VERTICES='many', PETRI_BASIS_MAX_ROUNDS=-1,
                       PETRI_POSTPONEMENT_CAP_FACTOR=0.5)
    def test_caps(self):
        self.assertEqual(
            sorted(ids(self.run_check())),
            ['petri_persistence.E002', 'petri_persistence.E003', 'petri_persistence.E004'])

    @override_settings(PETRI_STATE_BUDGET=1000000)
    def test_environment_not_an_integer(self):
        self.assertEqual(ids(self.run_check({'PETRI_STATE_BUDGET': 'lots'})), ['petri_persistence.E005'])

    @override_settings(PETRI_STATE_BUDGET=50)
    def test_low_budget(self):
        self.assertEqual(ids(self.run_check()), ['petri_persistence.W001'])

    @override_settings(PETRI_STATE_BUDGET=1000000)
    def test_low_budget_from_environment(self):
        self.assertEqual(ids(self.run_check({'PETRI_STATE_BUDGET': '10'})), ['petri_persistence.W001'])

    def test_project_settings_leave_the_environment_to_the_check(self):
        with patch.dict(os.environ, {'PETRI_STATE_BUDGET': 'lots'}):
            project_settings = importlib.reload(importlib.import_module(os.environ['DJANGO_SETTINGS_MODULE']))
            self.assertEqual(project_settings.PETRI_STATE_BUDGET, 1000000)
            with override_settings(PETRI_STATE_BUDGET=project_settings.PETRI_STATE_BUDGET):
                self.assertEqual(ids(analysis_settings(None)), ['petri_persistence.E005'])
