from django.core.management.base import BaseCommand, CommandError

from petri_persistence.exceptions import NetFileError
from petri_persistence.models import StoredNet
from petri_persistence.netfile import format_net, read_net
from petri_persistence.reports import EXIT_ERROR


class Command(BaseCommand):
    help = "Stores a net file in the database under the name it declares."

    def add_arguments(self, parser):
        parser.add_argument("path")
        parser.add_argument("--name", dest="name", help="store under this name instead")
        parser.add_argument("--replace", dest="replace", action="store_true", default=False,
                            help="overwrite a stored net of the same name")

    def handle(self, *args, **options):
        try:
            net = read_net(options['path'])
        except OSError as e:
            raise CommandError("Cannot read %s: %s" % (options['path'], e.strerror), returncode=EXIT_ERROR)
        except NetFileError as e:
            raise CommandError(str(e), returncode=EXIT_ERROR)

        name = options.get('name') or net.name
        source = format_net(net).replace('net %s\n' % net.name, 'net %s\n' % name, 1)
        if StoredNet.objects.filter(name=name).exists() and not options['replace']:
            raise CommandError("A net named %r is already stored" % name, returncode=EXIT_ERROR)
        stored, created = StoredNet.objects.update_or_create(name=name, defaults={'source': source})
        if int(options.get('verbosity', 1)) >= 1:
            self.stdout.write(self.style.SUCCESS(
                "%s %s (%d places, %d transitions)" % ('Stored' if created else 'Replaced', stored.name,
                                                       len(net.places), len(net.transitions))))
