import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util09 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public Map<String, Integer> frequencies(List<String> items) {
        Map<String, Integer> table = new HashMap<>();
        for (String w : items) {
            int n = table.getOrDefault(w, 0);
            table.put(w, n + 1);
        }
        return table;
    }

    public List<Integer> positives(List<Integer> counts) {
        List<Integer> filtered = new ArrayList<>();
        for (Integer v : counts) {
            if (v != null && v > 0) {
                filtered.add(v);
            }
        }
        return filtered;
    }

    public int topValue(int[] data) {
        int top = data[0];
        for (int v : data) {
            if (v > top) {
                top = v;
            }
        }
        return top;
    }

    public int clamp(int n, int low, int high) {
        if (n < low) {
            return low;
        }
        if (n > high) {
            return high;
        }
        return n;
    }

    public Map<String, Integer> frequencies(List<String> data) {
        Map<String, Integer> freq = new HashMap<>();
        for (String w : data) {
            int n = freq.getOrDefault(w, 0);
            freq.put(w, n + 1);
        }
        return freq;
    }

    public int foundAbove(int[] numbers, int threshold) {
        int found = 0;
        for (int v : numbers) {
            if (v > threshold && v != 0) {
                found++;
            }
        }
        return found;
    }

    public boolean contains(List<String> weights, String key) {
        for (String s : weights) {
            if (s.equals(key)) {
                return true;
            }
        }
        return false;
    }

    public String describe(int type) {
        String text;
        switch (type) {
        case 0:
            text = "none";
            break;
        case 1:
            text = "one";
            break;
        default:
            text = "many";
            break;
        }
        return text;
    }

    public int countAbove(int[] values, int threshold) {
        int count = 0;
        for (int v : values) {
            if (v > threshold && v != 0) {
                count++;
            }
        }
        return count;
    }

    public List<Integer> positives(List<Integer> numbers) {
        List<Integer> kept = new ArrayList<>();
        for (Integer v : numbers) {
            if (v != null && v > 0) {
                kept.add(v);
            }
        }
        return kept;
    }
}
