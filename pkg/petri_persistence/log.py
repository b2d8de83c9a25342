import logging

from .utils import get_current_analysis


class NetContextFilter(logging.Filter):
    """
    Add the current ``net_name`` and ``analysis`` to log records.
    """
    def filter(self, record):
        current = get_current_analysis() or ('', '')
        record.net_name, record.analysis = current
        return True
