#pragma once

#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace nv
{

/*! Smallest index in [0, count) satisfying pred, or nullopt.  Work is
    split into contiguous chunks; the result does not depend on the number
    of jobs. */
template<typename Pred>
std::optional<std::uint64_t> parallel_find_first( std::uint64_t count, unsigned jobs, Pred&& pred )
{
  if ( count == 0 )
    return std::nullopt;
  if ( jobs <= 1 || count < 1024 )
  {
    for ( std::uint64_t i = 0; i < count; ++i )
    {
      if ( pred( i ) )
        return i;
    }
    return std::nullopt;
  }

  unsigned const workers = std::min<std::uint64_t>( jobs, count );
  std::vector<std::optional<std::uint64_t>> found( workers );
  std::vector<std::thread> threads;
  threads.reserve( workers );
  std::uint64_t const chunk = ( count + workers - 1 ) / workers;
  for ( unsigned t = 0; t < workers; ++t )
  {
    threads.emplace_back( [&, t]() {
      std::uint64_t const lo = t * chunk;
      std::uint64_t const hi = std::min( count, lo + chunk );
      for ( std::uint64_t i = lo; i < hi; ++i )
      {
        if ( pred( i ) )
        {
          found[t] = i;
          return;
        }
      }
    } );
  }
  for ( auto& th : threads )
    th.join();
  for ( auto const& f : found )
  {
    if ( f )
      return f;
  }
  return std::nullopt;
}

} // namespace nv
