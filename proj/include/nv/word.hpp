/*!
  \file word.hpp
  \brief Generator registries and words: sizes, prefix-free encoding,
  evaluation to tables, streaming evaluation, identity testing, and the
  tau/sigma rewriting that embeds V over an infinite generating set into
  a finite generating set of 2V.

  A word is stored in display order: the leftmost token is applied last,
  matching the composition order f_t o ... o f_1.
*/

#pragma once

#include "parallel.hpp"
#include "table.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace nv
{

struct word_token
{
  enum class kind : std::uint8_t
  {
    named,
    tau,
    sigma
  };

  kind type = kind::named;
  std::string name;  // named generators
  int index = 0;     // tau(index)
  int exp = 1;       // +1 or -1

  bool operator==( word_token const& ) const = default;

  word_token inv() const
  {
    word_token t = *this;
    t.exp = -t.exp;
    return t;
  }
};

using word = std::vector<word_token>;

inline word_token named_token( std::string name, int exp = 1 )
{
  return { word_token::kind::named, std::move( name ), 0, exp };
}

inline word_token tau_token( int j )
{
  return { word_token::kind::tau, {}, j, 1 };
}

inline word_token sigma_token( int exp = 1 )
{
  return { word_token::kind::sigma, {}, 0, exp };
}

/*! Reverses token order and flips exponents; no free reduction. */
inline word inverse( word const& w )
{
  word out;
  out.reserve( w.size() );
  for ( auto it = w.rbegin(); it != w.rend(); ++it )
    out.push_back( it->inv() );
  return out;
}

inline word operator+( word const& a, word const& b )
{
  word out = a;
  out.insert( out.end(), b.begin(), b.end() );
  return out;
}

/*! Named tables plus the schematic families tau(j) (and sigma for n=2). */
class generator_registry
{
public:
  generator_registry( signature sig, std::vector<std::pair<std::string, table>> named )
      : sig_( sig ), named_( std::move( named ) )
  {
    check_signature( sig );
    if ( sig_.n > 2 )
      throw error( "BadSignature", "registries support n <= 2" );
    for ( std::size_t i = 0; i < named_.size(); ++i )
    {
      auto const& [name, t] = named_[i];
      if ( name.empty() || name == "sigma" || name.rfind( "tau(", 0 ) == 0 )
        throw error( "UnknownGenerator", "generator name '" + name + "' collides with schematic tokens" );
      if ( !( t.sig() == sig_ ) )
        throw error( "SignatureMismatch", "generator '" + name + "' has the wrong signature" );
      auto d = t.validate();
      if ( !d.ok )
        throw error( "BadTable", "generator '" + name + "': " + d.first_violation );
      if ( !index_.emplace( name, i ).second )
        throw error( "UnknownGenerator", "duplicate generator name '" + name + "'" );
    }
  }

  signature const& sig() const { return sig_; }
  bool sigma_enabled() const { return sig_.n == 2; }
  std::vector<std::pair<std::string, table>> const& named() const { return named_; }

  table const& named_table( std::string const& name ) const
  {
    auto it = index_.find( name );
    if ( it == index_.end() )
      throw error( "UnknownGenerator", "no generator named '" + name + "'" );
    return named_[it->second].second;
  }

  std::size_t named_index( std::string const& name ) const
  {
    auto it = index_.find( name );
    if ( it == index_.end() )
      throw error( "UnknownGenerator", "no generator named '" + name + "'" );
    return it->second;
  }

  bool has_named( std::string const& name ) const { return index_.count( name ) != 0; }

  /*! c_Gamma: max table length over the named generators. */
  int c_gamma() const
  {
    int m = 0;
    for ( auto const& [name, t] : named_ )
      m = std::max( m, ell( t ) );
    return m;
  }

private:
  signature sig_;
  std::vector<std::pair<std::string, table>> named_;
  std::map<std::string, std::size_t> index_;
};

/*! Table of tau(j): the transposition of string positions j, j+1.  For
    n = 1 the domain code is A^{j+1}; for n = 2 it is A^{j+1} x {eps}. */
inline table tau_table( signature sig, int j )
{
  if ( j < 1 )
    throw error( "BadIndex", "tau index must be >= 1" );
  if ( static_cast<double>( j + 1 ) * std::log2( sig.k ) > 24 )
    throw error( "TooLarge", "tau(" + std::to_string( j ) + ") table would have k^" + std::to_string( j + 1 ) + " entries" );
  table::pair_list ps;
  std::string s( static_cast<std::size_t>( j + 1 ), '0' );
  for ( ;; )
  {
    std::string img = s;
    std::swap( img[static_cast<std::size_t>( j - 1 )], img[static_cast<std::size_t>( j )] );
    std::vector<std::string> dc{ s }, ic{ img };
    for ( int i = 1; i < sig.n; ++i )
    {
      dc.emplace_back();
      ic.emplace_back();
    }
    ps.emplace_back( ntuple( sig, dc ), ntuple( sig, ic ) );
    // odometer over A^{j+1}
    int pos = j;
    while ( pos >= 0 && s[static_cast<std::size_t>( pos )] == '0' + sig.k - 1 )
    {
      s[static_cast<std::size_t>( pos )] = '0';
      --pos;
    }
    if ( pos < 0 )
      break;
    ++s[static_cast<std::size_t>( pos )];
  }
  return table( sig, std::move( ps ) );
}

/*! The shift of 2V: sigma(x, a y) = (a x, y). */
inline table sigma_table( signature sig )
{
  if ( sig.n != 2 )
    throw error( "WrongDimension", "the shift lives in 2V" );
  table::pair_list ps;
  for ( int a = 0; a < sig.k; ++a )
  {
    std::string d( 1, static_cast<char>( '0' + a ) );
    ps.emplace_back( ntuple( sig, { "", d } ), ntuple( sig, { d, "" } ) );
  }
  return table( sig, std::move( ps ) );
}

/*! The table of a single token (inverted when exp = -1). */
inline table token_table( word_token const& tok, generator_registry const& reg )
{
  table t = [&]() {
    switch ( tok.type )
    {
    case word_token::kind::named:
      return reg.named_table( tok.name );
    case word_token::kind::tau:
      return tau_table( reg.sig(), tok.index );
    default:
      if ( !reg.sigma_enabled() )
        throw error( "UnknownGenerator", "sigma requires an n = 2 registry" );
      return sigma_table( reg.sig() );
    }
  }();
  return tok.exp == 1 ? t : inverse( t );
}

/*! ell of the token's table, without materializing it. */
inline int token_ell( word_token const& tok, generator_registry const& reg )
{
  switch ( tok.type )
  {
  case word_token::kind::named:
    return ell( reg.named_table( tok.name ) );
  case word_token::kind::tau:
    return tok.index + 1;
  default:
    return 1;
  }
}

/*! Streaming application of one token; schematic tokens act symbolically
    so that high tau indices never materialize a table. */
inline std::optional<ntuple> apply_token( word_token const& tok, generator_registry const& reg, ntuple const& x )
{
  switch ( tok.type )
  {
  case word_token::kind::named:
  {
    auto const& t = reg.named_table( tok.name );
    return tok.exp == 1 ? t.apply( x ) : inverse( t ).apply( x );
  }
  case word_token::kind::tau:
  {
    std::size_t j = static_cast<std::size_t>( tok.index );
    if ( x.coord( 0 ).size() < j + 1 )
      return std::nullopt;
    auto cs = x.coords();
    std::swap( cs[0][j - 1], cs[0][j] );
    return ntuple( x.sig(), std::move( cs ) );
  }
  default:
  {
    if ( !reg.sigma_enabled() )
      throw error( "UnknownGenerator", "sigma requires an n = 2 registry" );
    auto cs = x.coords();
    if ( tok.exp == 1 )
    {
      if ( cs[1].empty() )
        return std::nullopt;
      cs[0].insert( cs[0].begin(), cs[1].front() );
      cs[1].erase( cs[1].begin() );
    }
    else
    {
      if ( cs[0].empty() )
        return std::nullopt;
      cs[1].insert( cs[1].begin(), cs[0].front() );
      cs[0].erase( cs[0].begin() );
    }
    return ntuple( x.sig(), std::move( cs ) );
  }
  }
}

/*! Word size: named generators and sigma contribute 1, tau(j) contributes
    j + 1. */
inline std::uint64_t word_size( word const& w, generator_registry const& reg )
{
  std::uint64_t s = 0;
  for ( auto const& tok : w )
  {
    if ( tok.type == word_token::kind::named && !reg.has_named( tok.name ) )
      throw error( "UnknownGenerator", "no generator named '" + tok.name + "'" );
    s += tok.type == word_token::kind::tau ? static_cast<std::uint64_t>( tok.index ) + 1 : 1;
  }
  return s;
}

namespace detail
{

/*! acc o tau_j over A* without materializing the transposition's table:
    refine the domain code to depth j+1 where needed and swap string
    positions j, j+1 on the domain side. */
inline table compose_acc_tau( table const& acc, int j )
{
  signature const sig = acc.sig();
  std::size_t const need = static_cast<std::size_t>( j ) + 1;
  double rows = 0;
  for ( auto const& [d, i] : acc.pairs() )
  {
    std::size_t const len = d.coord( 0 ).size();
    rows += len >= need ? 1.0 : std::pow( sig.k, static_cast<double>( need - len ) );
  }
  if ( rows > double( 1 << 24 ) )
    throw error( "TooLarge", "composing with tau(" + std::to_string( j ) + ") needs " + std::to_string( rows ) + " table rows" );
  table::pair_list ps;
  ps.reserve( acc.size() );
  for ( auto const& [d, i] : acc.pairs() )
  {
    auto const& ds = d.coord( 0 );
    if ( ds.size() >= need )
    {
      std::string nd = ds;
      std::swap( nd[static_cast<std::size_t>( j - 1 )], nd[static_cast<std::size_t>( j )] );
      ps.emplace_back( ntuple::trusted( sig, { std::move( nd ) } ), i );
    }
    else
    {
      std::string suffix( need - ds.size(), '0' );
      for ( ;; )
      {
        std::string nd = ds + suffix;
        std::swap( nd[static_cast<std::size_t>( j - 1 )], nd[static_cast<std::size_t>( j )] );
        ps.emplace_back( ntuple::trusted( sig, { std::move( nd ) } ),
                         ntuple::trusted( sig, { i.coord( 0 ) + suffix } ) );
        std::size_t pos = suffix.size();
        while ( pos > 0 && suffix[pos - 1] == '0' + sig.k - 1 )
          suffix[--pos] = '0';
        if ( pos == 0 )
          break;
        ++suffix[pos - 1];
      }
    }
  }
  return table( sig, std::move( ps ) );
}

} // namespace detail

/*! Composes the token tables, rightmost token applied first. */
inline table eval_to_table( word const& w, generator_registry const& reg )
{
  std::optional<table> acc;
  for ( auto const& tok : w )
  {
    if ( acc && tok.type == word_token::kind::tau && reg.sig().n == 1 )
    {
      acc = detail::compose_acc_tau( *acc, tok.index );
      continue;
    }
    table t = token_table( tok, reg );
    acc = acc ? compose( std::move( *acc ), t ) : std::move( t );
  }
  if ( !acc )
    return table::identity_on( uniform_code( reg.sig(), 0 ) );
  return std::move( *acc );
}

/*! Applies the generator tables one at a time, rightmost first; nullopt
    as soon as an intermediate application is undefined. */
inline std::optional<ntuple> streaming_eval( word const& w, generator_registry const& reg, ntuple x )
{
  for ( auto it = w.rbegin(); it != w.rend(); ++it )
  {
    auto y = apply_token( *it, reg, x );
    if ( !y )
      return std::nullopt;
    x = std::move( *y );
  }
  return x;
}

enum class identity_mode
{
  table,
  exhaustive
};

struct identity_result
{
  bool is_identity;
  std::optional<ntuple> witness; // moved point, when not the identity
};

/*! Uniform-code depth used by the exhaustive test: the per-word sum of
    generator table lengths.  Sound by the length formula for products. */
inline std::uint64_t exhaustive_depth( word const& w, generator_registry const& reg )
{
  std::uint64_t lambda = 0;
  for ( auto const& tok : w )
    lambda += static_cast<std::uint64_t>( token_ell( tok, reg ) );
  return lambda;
}

namespace detail
{

inline ntuple tuple_at( signature sig, std::uint64_t lambda, std::uint64_t index )
{
  // index written in base k, lambda digits per coordinate
  std::vector<std::string> cs( static_cast<std::size_t>( sig.n ) );
  for ( int i = sig.n; i-- > 0; )
  {
    std::string s( static_cast<std::size_t>( lambda ), '0' );
    for ( std::size_t pos = static_cast<std::size_t>( lambda ); pos-- > 0; )
    {
      s[pos] = static_cast<char>( '0' + index % sig.k );
      index /= sig.k;
    }
    cs[static_cast<std::size_t>( i )] = std::move( s );
  }
  return ntuple( sig, std::move( cs ) );
}

} // namespace detail

/*! Identity test.  Table mode composes and inspects the table; exhaustive
    mode streams every x in the uniform code of depth lambda and checks
    f_w(x) = x.  The two modes agree. */
inline identity_result is_identity_word( word const& w, generator_registry const& reg,
                                         identity_mode mode, unsigned jobs = 1 )
{
  if ( mode == identity_mode::table )
  {
    table t = eval_to_table( w, reg );
    for ( auto const& [d, i] : t.pairs() )
    {
      if ( !( d == i ) )
        return { false, d };
    }
    return { true, std::nullopt };
  }

  std::uint64_t const lambda = exhaustive_depth( w, reg );
  double bits = static_cast<double>( lambda ) * reg.sig().n * std::log2( reg.sig().k );
  if ( bits > 40 )
    throw error( "TooLarge", "exhaustive identity test over k^" + std::to_string( lambda * reg.sig().n ) + " inputs" );
  std::uint64_t total = 1;
  for ( std::uint64_t i = 0; i < lambda * static_cast<std::uint64_t>( reg.sig().n ); ++i )
    total *= static_cast<std::uint64_t>( reg.sig().k );

  auto probe = [&]( std::uint64_t idx ) -> bool {
    ntuple x = detail::tuple_at( reg.sig(), lambda, idx );
    auto y = streaming_eval( w, reg, x );
    return y && *y == x;
  };
  auto failure = parallel_find_first( total, jobs, [&]( std::uint64_t idx ) { return !probe( idx ); } );
  if ( failure )
    return { false, detail::tuple_at( reg.sig(), lambda, *failure ) };
  return { true, std::nullopt };
}

// --- token text ----------------------------------------------------------

inline std::string to_string( word_token const& tok )
{
  std::string s;
  switch ( tok.type )
  {
  case word_token::kind::named:
    s = tok.name;
    break;
  case word_token::kind::tau:
    s = "tau(" + std::to_string( tok.index ) + ")";
    break;
  default:
    s = "sigma";
    break;
  }
  if ( tok.exp == -1 )
    s += "^-1";
  return s;
}

inline std::string to_string( word const& w )
{
  std::string s;
  for ( auto const& tok : w )
  {
    if ( !s.empty() )
      s += ' ';
    s += to_string( tok );
  }
  return s;
}

/*! Token grammar: NAME | NAME^-1 | tau(J) | tau(J)^-1 | sigma | sigma^-1.
    tau tokens are involutions and are normalized to exponent +1. */
inline word parse_word( std::string const& text )
{
  word out;
  std::istringstream in( text );
  std::string item;
  while ( in >> item )
  {
    int exp = 1;
    if ( item.size() > 3 && item.compare( item.size() - 3, 3, "^-1" ) == 0 )
    {
      exp = -1;
      item.resize( item.size() - 3 );
    }
    if ( item == "sigma" )
    {
      out.push_back( sigma_token( exp ) );
    }
    else if ( item.rfind( "tau(", 0 ) == 0 && item.back() == ')' )
    {
      int j = 0;
      try
      {
        j = std::stoi( item.substr( 4, item.size() - 5 ) );
      }
      catch ( std::exception const& )
      {
        throw error( "BadToken", "malformed tau token '" + item + "'" );
      }
      if ( j < 1 )
        throw error( "BadIndex", "tau index must be >= 1" );
      out.push_back( tau_token( j ) );
    }
    else
    {
      out.push_back( named_token( item, exp ) );
    }
  }
  return out;
}

// --- prefix-free binary encoding ------------------------------------------

namespace detail
{

/*! Codeword slot of a token: sigma^{+1}, sigma^{-1} take the first two
    named slots when enabled; named generator g with exponent e takes slot
    2 * index(g) + (e < 0) after them.  Slot s encodes as 1 0^s 1; tau(j)
    encodes as 0^j 1. */
inline std::uint64_t token_slot( word_token const& tok, generator_registry const& reg )
{
  std::uint64_t const base = reg.sigma_enabled() ? 2 : 0;
  if ( tok.type == word_token::kind::sigma )
    return tok.exp == 1 ? 0 : 1;
  return base + 2 * reg.named_index( tok.name ) + ( tok.exp == -1 ? 1 : 0 );
}

} // namespace detail

inline std::string encode_word( word const& w, generator_registry const& reg )
{
  std::string bits;
  for ( auto const& tok : w )
  {
    if ( tok.type == word_token::kind::tau )
    {
      bits.append( static_cast<std::size_t>( tok.index ), '0' );
      bits.push_back( '1' );
    }
    else
    {
      bits.push_back( '1' );
      bits.append( detail::token_slot( tok, reg ), '0' );
      bits.push_back( '1' );
    }
  }
  return bits;
}

inline word decode_word( std::string const& bits, generator_registry const& reg )
{
  word out;
  std::size_t pos = 0;
  std::uint64_t const base = reg.sigma_enabled() ? 2 : 0;
  std::uint64_t const named_count = reg.named().size();
  while ( pos < bits.size() )
  {
    if ( bits[pos] == '0' )
    { // 0^j 1
      std::size_t j = 0;
      while ( pos < bits.size() && bits[pos] == '0' )
      {
        ++j;
        ++pos;
      }
      if ( pos == bits.size() )
        throw error( "MalformedBits", "dangling tau codeword" );
      ++pos;
      out.push_back( tau_token( static_cast<int>( j ) ) );
    }
    else
    { // 1 0^s 1
      ++pos;
      std::uint64_t s = 0;
      while ( pos < bits.size() && bits[pos] == '0' )
      {
        ++s;
        ++pos;
      }
      if ( pos == bits.size() || bits[pos] != '1' )
        throw error( "MalformedBits", "dangling generator codeword" );
      ++pos;
      if ( reg.sigma_enabled() && s < 2 )
      {
        out.push_back( sigma_token( s == 0 ? 1 : -1 ) );
        continue;
      }
      std::uint64_t slot = s - base;
      if ( slot / 2 >= named_count )
        throw error( "MalformedBits", "codeword slot " + std::to_string( s ) + " beyond the registry" );
      out.push_back( named_token( reg.named()[slot / 2].first, slot % 2 == 0 ? 1 : -1 ) );
    }
  }
  return out;
}

// --- tau/sigma rewriting ---------------------------------------------------

/*! tau_{i,j} as a word over adjacent transpositions:
    tau_{i,i+1} ... tau_{j-1,j} ... tau_{i,i+1}, length 2(j-i)-1.
    Empty word when i = j. */
inline word expand_tau_ij( int i, int j )
{
  if ( i < 1 || j < i )
    throw error( "BadIndices", "need 1 <= i <= j" );
  word w;
  for ( int t = i; t <= j - 1; ++t )
    w.push_back( tau_token( t ) );
  for ( int t = j - 2; t >= i; --t )
    w.push_back( tau_token( t ) );
  return w;
}

/*! sigma^{j-1} (tau_{1,2} x 1) sigma^{-j+1}: a word of length 2j-1 over
    {sigma, tau(1)} end-equivalent to tau_{j,j+1} x 1. */
inline word sigma_conjugate( int j )
{
  if ( j < 1 )
    throw error( "BadIndex", "tau index must be >= 1" );
  word w;
  for ( int t = 0; t < j - 1; ++t )
    w.push_back( sigma_token( 1 ) );
  w.push_back( tau_token( 1 ) );
  for ( int t = 0; t < j - 1; ++t )
    w.push_back( sigma_token( -1 ) );
  return w;
}

/*! gamma x 1: the n = 2 table acting as gamma on the first coordinate. */
inline table cross_one( table const& t )
{
  if ( t.sig().n != 1 )
    throw error( "WrongDimension", "cross_one lifts n = 1 tables" );
  signature sig2{ 2, t.sig().k };
  table::pair_list ps;
  for ( auto const& [d, i] : t.pairs() )
    ps.emplace_back( ntuple( sig2, { d.coord( 0 ), "" } ), ntuple( sig2, { i.coord( 0 ), "" } ) );
  return table( sig2, std::move( ps ) );
}

/*! The 2V registry for embedded words: every named generator gamma
    becomes gamma x 1; tau and sigma are schematic. */
inline generator_registry embed_registry( generator_registry const& reg )
{
  if ( reg.sig().n != 1 )
    throw error( "WrongDimension", "embedding starts from an n = 1 registry" );
  std::vector<std::pair<std::string, table>> named;
  named.reserve( reg.named().size() );
  for ( auto const& [name, t] : reg.named() )
    named.emplace_back( name, cross_one( t ) );
  return generator_registry( signature{ 2, reg.sig().k }, std::move( named ) );
}

/*! Replaces gamma by gamma x 1 and tau(j) by its sigma-conjugate word;
    identity is preserved and reflected. */
inline word embed_v_into_2v( word const& w, generator_registry const& reg )
{
  if ( reg.sig().n != 1 )
    throw error( "WrongDimension", "embedding starts from an n = 1 registry" );
  word out;
  for ( auto const& tok : w )
  {
    switch ( tok.type )
    {
    case word_token::kind::named:
      if ( !reg.has_named( tok.name ) )
        throw error( "UnknownGenerator", "no generator named '" + tok.name + "'" );
      out.push_back( tok );
      break;
    case word_token::kind::tau:
      out = out + sigma_conjugate( tok.index );
      break;
    default:
      throw error( "UnknownGenerator", "sigma does not occur in n = 1 words" );
    }
  }
  return out;
}

} // namespace nv
