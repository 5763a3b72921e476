#pragma once

#include <stdexcept>
#include <string>

namespace nv
{

/*! Library error carrying a stable machine-readable kind. */
class error : public std::runtime_error
{
public:
  error( std::string kind, std::string const& what )
      : std::runtime_error( kind + ": " + what ), kind_( std::move( kind ) )
  {
  }

  std::string const& kind() const { return kind_; }

private:
  std::string kind_;
};

} // namespace nv
