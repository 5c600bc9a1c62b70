#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcdr {

// Exit statuses: 0 all identities hold, 1 an identity failed, 2 usage or parse error,
// 3 a cap was exceeded. args excludes the program name.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace vcdr
