import os

os.environ.setdefault('INFOFID_ENV', 'testing')
