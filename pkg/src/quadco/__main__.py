from quadco.cli import main

raise SystemExit(main())
