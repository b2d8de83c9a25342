from django.core.exceptions import ValidationError
from django.core.serializers.json import DjangoJSONEncoder
from django.db import models

from .exceptions import NetFileError
from .netfile import format_net, parse_net
from .oracle import Status


class StoredNetQuerySet(models.QuerySet):

    def create_from_net(self, net):
        return self.create(name=net.name, source=format_net(net))


class StoredNet(models.Model):
    """
    A net kept in the database in net-file form.
    """

    name = models.CharField(max_length=128, unique=True)
    source = models.TextField()
    created = models.DateTimeField(auto_now_add=True)

    objects = StoredNetQuerySet.as_manager()

    class Meta:
        ordering = ('name',)

    def __str__(self):
        return self.name

    def clean(self):
        try:
            net = parse_net(self.source, name=self.name)
        except NetFileError as e:
            raise ValidationError({'source': str(e)})
        if net.name != self.name:
            raise ValidationError({'name': "The source declares the net %r" % net.name})

    def as_net(self):
        return parse_net(self.source, name=self.name)


class AnalysisRecordQuerySet(models.QuerySet):

    def for_verdict(self, verdict):
        if isinstance(verdict, Status):
            verdict = verdict.value
        return self.filter(verdict=verdict)


class AnalysisRecord(models.Model):

    VERDICT_CHOICES = [(status.value, status.value) for status in Status]

    net = models.ForeignKey(StoredNet, null=True, blank=True, on_delete=models.CASCADE,
                            related_name='analyses')
    net_name = models.CharField(max_length=128)
    command = models.CharField(max_length=64)
    verdict = models.CharField(max_length=16, choices=VERDICT_CHOICES)
    payload = models.JSONField(encoder=DjangoJSONEncoder, default=dict)
    created = models.DateTimeField(auto_now_add=True)

    objects = AnalysisRecordQuerySet.as_manager()

    class Meta:
        ordering = ('-created', '-pk')

    def __str__(self):
        return '%s %s: %s' % (self.command, self.net_name, self.verdict)

    @classmethod
    def from_report(cls, report, net=None):
        return cls.objects.create(
            net=net,
            net_name=report.net_name,
            command=report.command,
            verdict=report.verdict.status.value,
            payload=report.as_dict(),
        )
