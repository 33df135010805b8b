import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util00 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public boolean contains(List<String> numbers, String key) {
        for (String s : numbers) {
            if (s.equals(key)) {
                return true;
            }
        }
        return false;
    }

    public long area(int width, int height) {
        long size = (long) width * height;
        int margin = width + height * 2;
        size += margin;
        return size;
    }

    public double average(double[] numbers) {
        if (numbers.length == 0) {
            return 0;
        }
        double total = 0;
        for (double v : numbers) {
            total = total + v;
        }
        return total / numbers.length;
    }

    public void swap(int[] scores, int a, int b) {
        int tmp = scores[a];
        scores[a] = scores[b];
        scores[b] = tmp;
    }

    public String classify(int value) {
        if (value >= 60) {
            return "high";
        } else if (value >= 10) {
            return "medium";
        } else {
            return "low";
        }
    }

    public int parseOr(String text, int fallback) {
        try {
            return Integer.parseInt(text.trim());
        } catch (NumberFormatException e) {
            return fallback;
        }
    }

    public String join(List<String> numbers, String sep) {
        StringBuilder sb = new StringBuilder();
        for (int i = 0; i < numbers.size(); i++) {
            if (i > 0) {
                sb.append(sep);
            }
            sb.append(numbers.get(i));
        }
        return sb.toString();
    }

    public Map<String, Integer> frequencies(List<String> items) {
        Map<String, Integer> table = new HashMap<>();
        for (String w : items) {
            int n = table.getOrDefault(w, 0);
            table.put(w, n + 1);
        }
        return table;
    }

    public int clamp(int value, int low, int high) {
        if (value < low) {
            return low;
        }
        if (value > high) {
            return high;
        }
        return value;
    }

    public int clamp(int value, int low, int high) {
        if (value < low) {
            return low;
        }
        if (value > high) {
            return high;
        }
        return value;
    }
}
