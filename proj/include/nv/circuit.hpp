/*!
  \file circuit.hpp
  \brief Acyclic boolean circuits over {NOT, AND, OR, FORK, ID} plus the
  Fredkin gate: evaluation, sizing, leveling, strictification, slicing
  and reproducible random generation.

  Wires have fan-out 1; multi-fan-out sources are rewritten through FORK
  chains at parse time.  Levels are longest-path levels, the convention
  strictification needs.
*/

#pragma once

#include "error.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nv
{

enum class gate_type : std::uint8_t
{
  not_gate,
  and_gate,
  or_gate,
  fork,
  id,
  fredkin
};

inline int fan_in( gate_type t )
{
  switch ( t )
  {
  case gate_type::and_gate:
  case gate_type::or_gate:
    return 2;
  case gate_type::fredkin:
    return 3;
  default:
    return 1;
  }
}

inline int fan_out( gate_type t )
{
  switch ( t )
  {
  case gate_type::fork:
    return 2;
  case gate_type::fredkin:
    return 3;
  default:
    return 1;
  }
}

inline std::string to_string( gate_type t )
{
  switch ( t )
  {
  case gate_type::not_gate:
    return "not";
  case gate_type::and_gate:
    return "and";
  case gate_type::or_gate:
    return "or";
  case gate_type::fork:
    return "fork";
  case gate_type::id:
    return "id";
  default:
    return "fredkin";
  }
}

inline gate_type gate_type_from_string( std::string const& s )
{
  if ( s == "not" )
    return gate_type::not_gate;
  if ( s == "and" )
    return gate_type::and_gate;
  if ( s == "or" )
    return gate_type::or_gate;
  if ( s == "fork" )
    return gate_type::fork;
  if ( s == "id" )
    return gate_type::id;
  if ( s == "fredkin" )
    return gate_type::fredkin;
  throw error( "BadGate", "unknown gate type '" + s + "'" );
}

/*! A wire: output port `port` of gate `src`, or circuit input `port`
    when src < 0. */
struct wire_ref
{
  int src = -1;
  int port = 0;

  static wire_ref input( int i ) { return { -1, i }; }
  static wire_ref gate_out( int g, int p = 0 ) { return { g, p }; }

  bool from_input() const { return src < 0; }
  bool operator==( wire_ref const& ) const = default;
  auto operator<=>( wire_ref const& ) const = default;
};

struct gate
{
  gate_type type;
  std::vector<wire_ref> inputs;
  std::string id; // optional label from the file

  bool operator==( gate const& ) const = default;
};

class circuit
{
public:
  circuit( int m, int n, std::vector<gate> gates, std::vector<wire_ref> outputs )
      : m_( m ), n_( n ), gates_( std::move( gates ) ), outputs_( std::move( outputs ) )
  {
    validate();
  }

  int inputs() const { return m_; }
  int outputs_count() const { return n_; }
  std::vector<gate> const& gates() const { return gates_; }
  std::vector<wire_ref> const& outputs() const { return outputs_; }

  bool operator==( circuit const& o ) const
  {
    return m_ == o.m_ && n_ == o.n_ && gates_ == o.gates_ && outputs_ == o.outputs_;
  }

  /*! |C|: the number of edges (2-input gates count twice). */
  int size() const
  {
    int s = n_;
    for ( auto const& g : gates_ )
      s += fan_in( g.type );
    return s;
  }

  bool has_fredkin() const
  {
    for ( auto const& g : gates_ )
      if ( g.type == gate_type::fredkin )
        return true;
    return false;
  }

  bool fredkin_only() const
  {
    for ( auto const& g : gates_ )
      if ( g.type != gate_type::fredkin )
        return false;
    return true;
  }

  /*! Longest-path level of every gate; inputs are level 0. */
  std::vector<int> levels() const
  {
    std::vector<int> lv( gates_.size(), 0 );
    for ( std::size_t i = 0; i < gates_.size(); ++i )
    {
      int best = 0;
      for ( auto const& w : gates_[i].inputs )
        best = std::max( best, w.from_input() ? 0 : lv[static_cast<std::size_t>( w.src )] );
      lv[i] = best + 1;
    }
    return lv;
  }

  int depth() const
  {
    int d = 0;
    for ( int l : levels() )
      d = std::max( d, l );
    return d;
  }

  std::vector<bool> evaluate( std::vector<bool> const& x ) const
  {
    if ( static_cast<int>( x.size() ) != m_ )
      throw error( "WidthMismatch", "expected " + std::to_string( m_ ) + " input bits" );
    std::vector<std::vector<bool>> out( gates_.size() );
    auto value = [&]( wire_ref const& w ) {
      return w.from_input() ? x[static_cast<std::size_t>( w.port )]
                            : out[static_cast<std::size_t>( w.src )][static_cast<std::size_t>( w.port )];
    };
    for ( std::size_t i = 0; i < gates_.size(); ++i )
    {
      auto const& g = gates_[i];
      switch ( g.type )
      {
      case gate_type::not_gate:
        out[i] = { !value( g.inputs[0] ) };
        break;
      case gate_type::and_gate:
        out[i] = { value( g.inputs[0] ) && value( g.inputs[1] ) };
        break;
      case gate_type::or_gate:
        out[i] = { value( g.inputs[0] ) || value( g.inputs[1] ) };
        break;
      case gate_type::fork:
      {
        bool v = value( g.inputs[0] );
        out[i] = { v, v };
        break;
      }
      case gate_type::id:
        out[i] = { value( g.inputs[0] ) };
        break;
      case gate_type::fredkin:
      {
        bool c = value( g.inputs[0] ), a = value( g.inputs[1] ), b = value( g.inputs[2] );
        out[i] = c ? std::vector<bool>{ c, b, a } : std::vector<bool>{ c, a, b };
        break;
      }
      }
    }
    std::vector<bool> y;
    y.reserve( static_cast<std::size_t>( n_ ) );
    for ( auto const& w : outputs_ )
      y.push_back( value( w ) );
    return y;
  }

  /*! Truth table: output row for every input, in input order. */
  std::vector<std::vector<bool>> truth_table() const
  {
    if ( m_ > 20 )
      throw error( "TooLarge", "truth table over 2^" + std::to_string( m_ ) + " inputs" );
    std::vector<std::vector<bool>> rows;
    rows.reserve( 1ull << m_ );
    for ( std::uint64_t v = 0; v < ( 1ull << m_ ); ++v )
      rows.push_back( evaluate( input_bits( v ) ) );
    return rows;
  }

  std::vector<bool> input_bits( std::uint64_t v ) const
  {
    std::vector<bool> x( static_cast<std::size_t>( m_ ) );
    for ( int i = 0; i < m_; ++i )
      x[static_cast<std::size_t>( i )] = ( v >> ( m_ - 1 - i ) ) & 1;
    return x;
  }

private:
  void validate() const
  {
    if ( m_ < 1 )
      throw error( "BadCircuit", "need at least one input" );
    if ( n_ < 1 )
      throw error( "BadCircuit", "need at least one output" );
    if ( static_cast<int>( outputs_.size() ) != n_ )
      throw error( "BadCircuit", "output list does not match the declared arity" );

    std::vector<std::vector<int>> consumers( gates_.size() );
    std::vector<int> input_used( static_cast<std::size_t>( m_ ), 0 );
    auto check_wire = [&]( wire_ref const& w, std::size_t at ) {
      if ( w.from_input() )
      {
        if ( w.port < 0 || w.port >= m_ )
          throw error( "BadCircuit", "wire references input x" + std::to_string( w.port + 1 ) );
        input_used[static_cast<std::size_t>( w.port )]++;
        return;
      }
      if ( w.src < 0 || w.src >= static_cast<int>( gates_.size() ) )
        throw error( "BadCircuit", "wire references a missing gate" );
      if ( at != static_cast<std::size_t>( -1 ) && static_cast<std::size_t>( w.src ) >= at )
        throw error( "BadCircuit", "gate list is not topologically ordered (acyclicity)" );
      if ( w.port < 0 || w.port >= fan_out( gates_[static_cast<std::size_t>( w.src )].type ) )
        throw error( "BadCircuit", "wire references a missing output port" );
      consumers[static_cast<std::size_t>( w.src )].push_back( w.port );
    };
    for ( std::size_t i = 0; i < gates_.size(); ++i )
    {
      if ( static_cast<int>( gates_[i].inputs.size() ) != fan_in( gates_[i].type ) )
        throw error( "BadCircuit", "gate " + std::to_string( i ) + " has the wrong fan-in" );
      for ( auto const& w : gates_[i].inputs )
        check_wire( w, i );
    }
    for ( auto const& w : outputs_ )
      check_wire( w, static_cast<std::size_t>( -1 ) );

    // fan-out discipline: every output port consumed exactly once
    for ( std::size_t i = 0; i < gates_.size(); ++i )
    {
      if ( static_cast<int>( consumers[i].size() ) != fan_out( gates_[i].type ) )
        throw error( "BadCircuit", "gate " + std::to_string( i ) + " has dangling or multiply-used output ports" );
      auto ports = consumers[i];
      std::sort( ports.begin(), ports.end() );
      for ( int p = 0; p < fan_out( gates_[i].type ); ++p )
      {
        if ( ports[static_cast<std::size_t>( p )] != p )
          throw error( "BadCircuit", "gate " + std::to_string( i ) + " has dangling or multiply-used output ports" );
      }
    }
    for ( int i = 0; i < m_; ++i )
    {
      if ( input_used[static_cast<std::size_t>( i )] == 0 )
        throw error( "BadCircuit", "input x" + std::to_string( i + 1 ) + " reaches no output" );
      if ( input_used[static_cast<std::size_t>( i )] > 1 )
        throw error( "BadCircuit", "input x" + std::to_string( i + 1 ) + " has fan-out > 1" );
    }
  }

  int m_;
  int n_;
  std::vector<gate> gates_;
  std::vector<wire_ref> outputs_;
};

/*! Strictly layered: every gate reads only the previous level, every
    output is fed from the last level, and there is at least one level. */
inline bool is_strict( circuit const& c )
{
  auto lv = c.levels();
  int const depth = c.depth();
  if ( depth == 0 )
    return false;
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    for ( auto const& w : c.gates()[i].inputs )
    {
      int src_lv = w.from_input() ? 0 : lv[static_cast<std::size_t>( w.src )];
      if ( src_lv != lv[i] - 1 )
        return false;
    }
  }
  for ( auto const& w : c.outputs() )
  {
    if ( w.from_input() || lv[static_cast<std::size_t>( w.src )] != depth )
      return false;
  }
  return true;
}

/*! Inserts identity gates so that the circuit becomes strictly layered;
    the input-output function is unchanged.  Already-strict circuits are
    returned as-is. */
inline circuit strictify( circuit const& c )
{
  if ( is_strict( c ) )
    return c;

  auto lv = c.levels();
  int const depth = std::max( 1, c.depth() );

  struct tmp_ref
  {
    int level; // -1: circuit input
    int index; // position in layer, or input port
    int port;
  };
  struct tmp_gate
  {
    gate_type type;
    std::vector<tmp_ref> inputs;
    std::string id;
  };

  std::vector<std::vector<tmp_gate>> layers( static_cast<std::size_t>( depth ) );
  std::vector<int> placed( c.gates().size() );
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    auto& layer = layers[static_cast<std::size_t>( lv[i] - 1 )];
    placed[i] = static_cast<int>( layer.size() );
    layer.push_back( tmp_gate{ c.gates()[i].type, {}, c.gates()[i].id } );
  }
  auto encode = [&]( wire_ref const& w ) -> tmp_ref {
    if ( w.from_input() )
      return { -1, w.port, 0 };
    return { lv[static_cast<std::size_t>( w.src )] - 1, placed[static_cast<std::size_t>( w.src )], w.port };
  };
  // id chain from r (at level r.level) up to target_level
  auto pad = [&]( tmp_ref r, int target_level ) {
    int cur = r.level;
    while ( cur < target_level )
    {
      auto& layer = layers[static_cast<std::size_t>( cur + 1 )];
      layer.push_back( tmp_gate{ gate_type::id, { r }, {} } );
      r = tmp_ref{ cur + 1, static_cast<int>( layer.size() ) - 1, 0 };
      ++cur;
    }
    return r;
  };

  // rewrite original gate inputs, top level first; chains inserted by a
  // level only land strictly below it
  for ( int l = depth; l-- > 0; )
  {
    std::size_t const original_count = layers[static_cast<std::size_t>( l )].size();
    for ( std::size_t gi = 0; gi < original_count; ++gi )
    {
      auto& tg = layers[static_cast<std::size_t>( l )][gi];
      if ( !tg.inputs.empty() )
        continue; // id gate added by padding, already strict
      std::size_t oi = 0;
      for ( std::size_t i = 0; i < c.gates().size(); ++i )
      {
        if ( lv[i] - 1 == l && placed[i] == static_cast<int>( gi ) )
        {
          oi = i;
          break;
        }
      }
      for ( auto const& w : c.gates()[oi].inputs )
        tg.inputs.push_back( pad( encode( w ), l - 1 ) );
    }
  }
  // outputs rise to the last level
  std::vector<tmp_ref> outs;
  for ( auto const& w : c.outputs() )
    outs.push_back( pad( encode( w ), depth - 1 ) );

  // flatten level by level
  std::vector<std::vector<int>> base( layers.size() );
  std::vector<gate> flat;
  for ( std::size_t l = 0; l < layers.size(); ++l )
  {
    base[l].resize( layers[l].size() );
    for ( std::size_t i = 0; i < layers[l].size(); ++i )
    {
      base[l][i] = static_cast<int>( flat.size() );
      flat.push_back( gate{ layers[l][i].type, {}, layers[l][i].id } );
    }
  }
  auto resolve = [&]( tmp_ref const& r ) {
    if ( r.level < 0 )
      return wire_ref::input( r.index );
    return wire_ref::gate_out( base[static_cast<std::size_t>( r.level )][static_cast<std::size_t>( r.index )], r.port );
  };
  for ( std::size_t l = 0; l < layers.size(); ++l )
  {
    for ( std::size_t i = 0; i < layers[l].size(); ++i )
    {
      for ( auto const& r : layers[l][i].inputs )
        flat[static_cast<std::size_t>( base[l][i] )].inputs.push_back( resolve( r ) );
    }
  }
  std::vector<wire_ref> outputs;
  for ( auto const& r : outs )
    outputs.push_back( resolve( r ) );
  return circuit( c.inputs(), c.outputs_count(), std::move( flat ), std::move( outputs ) );
}

/*! One level of a strictly layered circuit: an input-wire permutation
    followed by the level's gates left to right on consecutive segments. */
struct slice
{
  int width_in = 0;
  int width_out = 0;
  std::vector<int> perm; // consumed slot t reads previous-level wire perm[t]
  std::vector<gate_type> gates;
  int size = 0;          // edges attributed to this slice

  std::vector<bool> evaluate( std::vector<bool> const& x ) const
  {
    if ( static_cast<int>( x.size() ) != width_in )
      throw error( "WidthMismatch", "slice expects " + std::to_string( width_in ) + " bits" );
    std::vector<bool> permuted( perm.size() );
    for ( std::size_t t = 0; t < perm.size(); ++t )
      permuted[t] = x[static_cast<std::size_t>( perm[t] )];
    std::vector<bool> y;
    y.reserve( static_cast<std::size_t>( width_out ) );
    std::size_t at = 0;
    for ( auto t : gates )
    {
      switch ( t )
      {
      case gate_type::not_gate:
        y.push_back( !permuted[at] );
        break;
      case gate_type::and_gate:
        y.push_back( permuted[at] && permuted[at + 1] );
        break;
      case gate_type::or_gate:
        y.push_back( permuted[at] || permuted[at + 1] );
        break;
      case gate_type::fork:
        y.push_back( permuted[at] );
        y.push_back( permuted[at] );
        break;
      case gate_type::id:
        y.push_back( permuted[at] );
        break;
      case gate_type::fredkin:
      {
        bool ctl = permuted[at], a = permuted[at + 1], b = permuted[at + 2];
        y.push_back( ctl );
        y.push_back( ctl ? b : a );
        y.push_back( ctl ? a : b );
        break;
      }
      }
      at += static_cast<std::size_t>( fan_in( t ) );
    }
    return y;
  }
};

/*! Slice decomposition plus the final crossing from the last level's
    production order to the declared output order. */
struct sliced_circuit
{
  std::vector<slice> levels;
  std::vector<int> output_perm; // declared output j is production slot output_perm[j]

  bool output_aligned() const
  {
    for ( std::size_t i = 0; i < output_perm.size(); ++i )
      if ( output_perm[i] != static_cast<int>( i ) )
        return false;
    return true;
  }

  std::vector<bool> evaluate( std::vector<bool> x ) const
  {
    for ( auto const& s : levels )
      x = s.evaluate( x );
    std::vector<bool> y( output_perm.size() );
    for ( std::size_t i = 0; i < output_perm.size(); ++i )
      y[i] = x[static_cast<std::size_t>( output_perm[i] )];
    return y;
  }
};

/*! Per-level decomposition of a strictly layered circuit.  Edges are
    attributed to the slice that consumes them, and the final output
    edges to the last slice, so slice sizes add up to |C|. */
inline sliced_circuit slices( circuit const& c )
{
  if ( !is_strict( c ) )
    throw error( "NotStrict", "slices require a strictly layered circuit" );
  auto lv = c.levels();
  int const depth = c.depth();

  std::vector<std::vector<wire_ref>> order( static_cast<std::size_t>( depth ) + 1 );
  for ( int i = 0; i < c.inputs(); ++i )
    order[0].push_back( wire_ref::input( i ) );
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    for ( int p = 0; p < fan_out( c.gates()[i].type ); ++p )
      order[static_cast<std::size_t>( lv[i] )].push_back( wire_ref::gate_out( static_cast<int>( i ), p ) );
  }

  sliced_circuit out;
  for ( int l = 1; l <= depth; ++l )
  {
    slice s;
    s.width_in = static_cast<int>( order[static_cast<std::size_t>( l - 1 )].size() );
    s.width_out = static_cast<int>( order[static_cast<std::size_t>( l )].size() );
    auto const& prev = order[static_cast<std::size_t>( l - 1 )];
    for ( std::size_t i = 0; i < c.gates().size(); ++i )
    {
      if ( lv[i] != l )
        continue;
      s.gates.push_back( c.gates()[i].type );
      for ( auto const& w : c.gates()[i].inputs )
      {
        auto it = std::find( prev.begin(), prev.end(), w );
        s.perm.push_back( static_cast<int>( it - prev.begin() ) );
      }
    }
    s.size = static_cast<int>( s.perm.size() ) + ( l == depth ? s.width_out : 0 );
    out.levels.push_back( std::move( s ) );
  }
  auto const& last = order[static_cast<std::size_t>( depth )];
  for ( auto const& w : c.outputs() )
  {
    auto it = std::find( last.begin(), last.end(), w );
    out.output_perm.push_back( static_cast<int>( it - last.begin() ) );
  }
  return out;
}

/*! Reproducible pseudo-random circuit over {NOT, AND, OR, FORK, ID}. */
inline circuit random_circuit( int m, int gate_budget, std::uint64_t seed )
{
  if ( m < 1 )
    throw error( "BadCircuit", "need at least one input" );
  std::mt19937_64 rng( seed );
  std::vector<wire_ref> pool;
  for ( int i = 0; i < m; ++i )
    pool.push_back( wire_ref::input( i ) );
  std::vector<gate> gates;
  auto take = [&]( std::size_t idx ) {
    wire_ref w = pool[idx];
    pool.erase( pool.begin() + static_cast<std::ptrdiff_t>( idx ) );
    return w;
  };
  for ( int g = 0; g < gate_budget; ++g )
  {
    gate_type type;
    switch ( rng() % 5 )
    {
    case 0:
      type = gate_type::not_gate;
      break;
    case 1:
      type = gate_type::and_gate;
      break;
    case 2:
      type = gate_type::or_gate;
      break;
    case 3:
      type = gate_type::fork;
      break;
    default:
      type = gate_type::id;
      break;
    }
    if ( pool.size() < 2 && fan_in( type ) == 2 )
      type = gate_type::fork;
    std::vector<wire_ref> ins;
    for ( int i = 0; i < fan_in( type ); ++i )
      ins.push_back( take( rng() % pool.size() ) );
    gates.push_back( gate{ type, std::move( ins ), {} } );
    for ( int p = 0; p < fan_out( type ); ++p )
      pool.push_back( wire_ref::gate_out( static_cast<int>( gates.size() ) - 1, p ) );
  }
  int const n = static_cast<int>( pool.size() );
  return circuit( m, n, std::move( gates ), std::move( pool ) );
}

} // namespace nv
