#ifndef BSAKS_TEXT_FORMAT_HPP
#define BSAKS_TEXT_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsaks {

/// Key-value document with nested blocks:
///
///   kind = l1-sum
///   block {
///     kind = weighted-alpha
///     alpha = 1/3
///   }
///
/// '#' starts a comment. Keys may repeat; order is preserved.
struct TextBlock {
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, TextBlock>> children;

  std::optional<std::string> get(std::string_view key) const;
  std::string require(std::string_view key) const;
  const TextBlock* child(std::string_view key) const;
  std::vector<const TextBlock*> children_named(std::string_view key) const;

  TextBlock& set(std::string key, std::string value);
  TextBlock& add_child(std::string key, TextBlock block);
};

TextBlock parse_text(std::string_view text);
TextBlock read_text_file(const std::string& path);
std::string format_text(const TextBlock& block, int indent = 0);

}  // namespace bsaks

#endif  // BSAKS_TEXT_FORMAT_HPP
