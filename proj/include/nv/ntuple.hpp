/*!
  \file ntuple.hpp
  \brief The free monoid of n-tuples of digit strings, with the
  initial-factor order, meet, join, measure and length functionals.
*/

#pragma once

#include "error.hpp"
#include "rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nv
{

/*! Dimension n and alphabet size k of the ambient monoid. */
struct signature
{
  int n = 1;
  int k = 2;

  bool operator==( signature const& ) const = default;
};

inline void check_signature( signature const& s )
{
  if ( s.n < 1 )
    throw error( "BadSignature", "dimension must be >= 1" );
  if ( s.k < 2 || s.k > 10 )
    throw error( "BadSignature", "alphabet size must be in [2,10]" );
}

/*! An element of the monoid: n coordinate strings over {0,...,k-1}. */
class ntuple
{
public:
  ntuple( signature sig, std::vector<std::string> coords )
      : sig_( sig ), coords_( std::move( coords ) )
  {
    check_signature( sig_ );
    if ( static_cast<int>( coords_.size() ) != sig_.n )
      throw error( "BadTuple", "expected " + std::to_string( sig_.n ) + " coordinates" );
    for ( auto const& c : coords_ )
    {
      for ( char ch : c )
      {
        if ( ch < '0' || ch >= '0' + sig_.k )
          throw error( "BadTuple", std::string( "character '" ) + ch + "' is not a digit below " + std::to_string( sig_.k ) );
      }
    }
  }

  static ntuple root( signature sig )
  {
    return ntuple( sig, std::vector<std::string>( sig.n ) );
  }

  //! construction bypassing digit validation, for coordinates that are
  //! substrings of already validated tuples
  static ntuple trusted( signature sig, std::vector<std::string> coords )
  {
    ntuple t;
    t.sig_ = sig;
    t.coords_ = std::move( coords );
    return t;
  }

  signature const& sig() const { return sig_; }
  int n() const { return sig_.n; }
  int k() const { return sig_.k; }

  std::string const& coord( int i ) const { return coords_[static_cast<std::size_t>( i )]; }
  std::vector<std::string> const& coords() const { return coords_; }

  bool is_root() const
  {
    for ( auto const& c : coords_ )
      if ( !c.empty() )
        return false;
    return true;
  }

  //! total coordinate length
  std::uint64_t weight() const
  {
    std::uint64_t s = 0;
    for ( auto const& c : coords_ )
      s += c.size();
    return s;
  }

  //! tuple with digit a appended to coordinate axis (axis is 1-based)
  ntuple child( int axis, int digit ) const
  {
    auto cs = coords_;
    cs[static_cast<std::size_t>( axis - 1 )].push_back( static_cast<char>( '0' + digit ) );
    return ntuple( sig_, std::move( cs ) );
  }

  bool operator==( ntuple const& o ) const
  {
    return sig_ == o.sig_ && coords_ == o.coords_;
  }

  // fixed total order: lexicographic by coordinate, then coordinate index
  std::strong_ordering operator<=>( ntuple const& o ) const
  {
    return coords_ <=> o.coords_;
  }

private:
  ntuple() = default;

  signature sig_;
  std::vector<std::string> coords_;
};

inline void check_same_signature( ntuple const& u, ntuple const& v )
{
  if ( !( u.sig() == v.sig() ) )
    throw error( "SignatureMismatch", "tuples live in different monoids" );
}

inline bool is_prefix( std::string const& p, std::string const& x )
{
  return p.size() <= x.size() && x.compare( 0, p.size(), p ) == 0;
}

inline bool prefix_comparable( std::string const& a, std::string const& b )
{
  return is_prefix( a, b ) || is_prefix( b, a );
}

/*! u <=_init v: coordinatewise prefix. */
inline bool leq_init( ntuple const& u, ntuple const& v )
{
  check_same_signature( u, v );
  for ( int i = 0; i < u.n(); ++i )
  {
    if ( !is_prefix( u.coord( i ), v.coord( i ) ) )
      return false;
  }
  return true;
}

/*! Coordinatewise longest common prefix; always exists. */
inline ntuple meet( ntuple const& u, ntuple const& v )
{
  check_same_signature( u, v );
  std::vector<std::string> cs( static_cast<std::size_t>( u.n() ) );
  for ( int i = 0; i < u.n(); ++i )
  {
    auto const& a = u.coord( i );
    auto const& b = v.coord( i );
    std::size_t j = 0;
    while ( j < a.size() && j < b.size() && a[j] == b[j] )
      ++j;
    cs[static_cast<std::size_t>( i )] = a.substr( 0, j );
  }
  return ntuple( u.sig(), std::move( cs ) );
}

/*! Least common upper bound for <=_init; exists iff every coordinate pair
    is prefix-comparable, and then takes the longer string per coordinate. */
inline std::optional<ntuple> join( ntuple const& u, ntuple const& v )
{
  check_same_signature( u, v );
  std::vector<std::string> cs( static_cast<std::size_t>( u.n() ) );
  for ( int i = 0; i < u.n(); ++i )
  {
    auto const& a = u.coord( i );
    auto const& b = v.coord( i );
    if ( is_prefix( a, b ) )
      cs[static_cast<std::size_t>( i )] = b;
    else if ( is_prefix( b, a ) )
      cs[static_cast<std::size_t>( i )] = a;
    else
      return std::nullopt;
  }
  return ntuple( u.sig(), std::move( cs ) );
}

inline bool joinable( ntuple const& u, ntuple const& v )
{
  check_same_signature( u, v );
  for ( int i = 0; i < u.n(); ++i )
  {
    if ( !prefix_comparable( u.coord( i ), v.coord( i ) ) )
      return false;
  }
  return true;
}

inline ntuple concat( ntuple const& u, ntuple const& v )
{
  check_same_signature( u, v );
  std::vector<std::string> cs( static_cast<std::size_t>( u.n() ) );
  for ( int i = 0; i < u.n(); ++i )
    cs[static_cast<std::size_t>( i )] = u.coord( i ) + v.coord( i );
  return ntuple( u.sig(), std::move( cs ) );
}

/*! u with p * u = x, when p <=_init x. */
inline std::optional<ntuple> left_quotient( ntuple const& p, ntuple const& x )
{
  check_same_signature( p, x );
  if ( !leq_init( p, x ) )
    return std::nullopt;
  std::vector<std::string> cs( static_cast<std::size_t>( p.n() ) );
  for ( int i = 0; i < p.n(); ++i )
    cs[static_cast<std::size_t>( i )] = x.coord( i ).substr( p.coord( i ).size() );
  return ntuple( p.sig(), std::move( cs ) );
}

/*! mu(x) = k^{-(|x_1| + ... + |x_n|)}, exact. */
inline rational measure( ntuple const& x )
{
  return rational::inverse_power( static_cast<std::uint32_t>( x.k() ), x.weight() );
}

/*! ell(x) = max coordinate length. */
inline int ell( ntuple const& x )
{
  std::size_t m = 0;
  for ( int i = 0; i < x.n(); ++i )
    m = std::max( m, x.coord( i ).size() );
  return static_cast<int>( m );
}

/*! Textual form: "(010,00)", empty coordinate rendered as "-". */
inline std::string to_string( ntuple const& x )
{
  std::string s = "(";
  for ( int i = 0; i < x.n(); ++i )
  {
    if ( i > 0 )
      s += ',';
    s += x.coord( i ).empty() ? "-" : x.coord( i );
  }
  s += ')';
  return s;
}

/*! Parses the textual form; for n = 1 a bare digit string is accepted. */
inline ntuple parse_ntuple( signature sig, std::string const& text )
{
  std::string body = text;
  if ( !body.empty() && body.front() == '(' )
  {
    if ( body.back() != ')' )
      throw error( "BadTuple", "unbalanced parentheses in '" + text + "'" );
    body = body.substr( 1, body.size() - 2 );
  }
  std::vector<std::string> cs;
  std::string cur;
  for ( char ch : body )
  {
    if ( ch == ',' )
    {
      cs.push_back( cur );
      cur.clear();
    }
    else if ( ch != ' ' )
    {
      cur.push_back( ch );
    }
  }
  cs.push_back( cur );
  for ( auto& c : cs )
  {
    if ( c == "-" )
      c.clear();
  }
  return ntuple( sig, std::move( cs ) );
}

/*! All initial factors of x (the product of coordinate prefix choices). */
inline std::vector<ntuple> initial_factors( ntuple const& x )
{
  std::vector<ntuple> out;
  std::vector<std::string> cur( static_cast<std::size_t>( x.n() ) );
  std::function<void( int )> rec = [&]( int i ) {
    if ( i == x.n() )
    {
      out.emplace_back( x.sig(), cur );
      return;
    }
    for ( std::size_t len = 0; len <= x.coord( i ).size(); ++len )
    {
      cur[static_cast<std::size_t>( i )] = x.coord( i ).substr( 0, len );
      rec( i + 1 );
    }
  };
  rec( 0 );
  return out;
}

} // namespace nv

template<>
struct std::hash<nv::ntuple>
{
  std::size_t operator()( nv::ntuple const& x ) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for ( int i = 0; i < x.n(); ++i )
    {
      for ( char c : x.coord( i ) )
      {
        h ^= static_cast<std::size_t>( c );
        h *= 1099511628211ull;
      }
      h ^= 0x2c;
      h *= 1099511628211ull;
    }
    return h;
  }
};
