#pragma once

#include <string>

#include "bramble/documents.hpp"

namespace bramble {

/// Graphviz rendering of an instance: bags as colored clusters, with a vertex
/// shared by several bags duplicated into each cluster and annotated with its
/// occurrence count; terminals highlighted. Display only.
std::string exportDot(const InstanceDocument& doc);

}  // namespace bramble
