#pragma once

namespace cli {

// exit 0: success; exit 2: validation or usage error (diagnostic on stderr);
// exit 3: certificate search returned unknown
int cmd_dispatch(int argc, const char* const* argv);

}  // namespace cli
