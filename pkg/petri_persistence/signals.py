from django.dispatch import Signal

analysis_finished = Signal()
analysis_finished.__doc__ = """
Sent by the management commands once a report is built. Receivers get
``report`` (an ``AnalysisReport``) and ``options`` (the command options).
"""
