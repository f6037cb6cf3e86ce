from eomlab.cli import main

raise SystemExit(main())
