import logging
import os

from django.apps import AppConfig
from django.conf import settings
from django.core.checks import Error, Warning, register

from .utils import STATE_BUDGET_ENV

logger = logging.getLogger(__name__)

POSITIVE_SETTINGS = (
    ('PETRI_STATE_BUDGET', 'petri_persistence.E001'),
    ('PETRI_COVERABILITY_MAX_VERTICES', 'petri_persistence.E002'),
    ('PETRI_BASIS_MAX_ROUNDS', 'petri_persistence.E003'),
    ('PETRI_POSTPONEMENT_CAP_FACTOR', 'petri_persistence.E004'),
)
LOW_BUDGET = 1000


def save_analysis(sender, report, options, **kwargs):
    if not options.get('save'):
        return
    from .models import AnalysisRecord, StoredNet

    net = None
    if options.get('stored'):
        net = StoredNet.objects.filter(name=options['stored']).first()
    record = AnalysisRecord.from_report(report, net=net)
    logger.info("Saved analysis %s of %s as record %d", report.command, report.net_name, record.pk)


class PetriPersistenceConfig(AppConfig):
    name = 'petri_persistence'
    default_auto_field = 'django.db.models.AutoField'

    def ready(self):
        from .signals import analysis_finished
        analysis_finished.connect(save_analysis, dispatch_uid='petri_persistence.save_analysis')


def _is_positive_int(value):
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


@register('config')
def analysis_settings(app_configs, **kwargs):
    """
    Budgets and caps must be positive integers; a tiny state budget is
    allowed but makes most verdicts on unbounded nets Unknown.
    """
    errors = []
    warnings = []

    for name, check_id in POSITIVE_SETTINGS:
        if hasattr(settings, name) and not _is_positive_int(getattr(settings, name)):
            errors.append(
                Error("%s must be a positive integer." % name,
                      hint="Got %r" % (getattr(settings, name),),
                      obj="django.conf.settings",
                      id=check_id))

    from_env = os.environ.get(STATE_BUDGET_ENV)
    budget = getattr(settings, 'PETRI_STATE_BUDGET', 1000000)
    if from_env:
        try:
            budget = int(from_env)
        except ValueError:
            errors.append(
                Error("The %s environment variable is not an integer." % STATE_BUDGET_ENV,
                      hint="Got %r" % from_env,
                      id="petri_persistence.E005"))
            budget = None

    if _is_positive_int(budget) and budget < LOW_BUDGET:
        warnings.append(
            Warning("The state budget of %d is very low; analyses will often be Unknown." % budget,
                    obj="django.conf.settings",
                    id="petri_persistence.W001"))

    return warnings + errors
