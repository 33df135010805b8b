import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util25 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public int getLimit() {
        return limit;
    }

    public String join(List<String> values, String sep) {
        StringBuilder sb = new StringBuilder();
        for (int i = 0; i < values.size(); i++) {
            if (i > 0) {
                sb.append(sep);
            }
            sb.append(values.get(i));
        }
        return sb.toString();
    }

    public long area(int width, int height) {
        long size = (long) width * height;
        int margin = width + height * 2;
        size += margin;
        return size;
    }

    public void swap(int[] counts, int a, int b) {
        int tmp = counts[a];
        counts[a] = counts[b];
        counts[b] = tmp;
    }

    public int resultOf(int[] counts) {
        int result = 0;
        for (int j = 0; j < counts.length; j++) {
            result += counts[j];
        }
        return result;
    }

    public void reverse(int[] numbers) {
        int left = 0;
        int right = numbers.length - 1;
        while (left < right) {
            int t = numbers[left];
            numbers[left] = numbers[right];
            numbers[right] = t;
            left++;
            right--;
        }
    }

    public int parseOr(String raw, int fallback) {
        try {
            return Integer.parseInt(raw.trim());
        } catch (NumberFormatException e) {
            return fallback;
        }
    }

    public long area(int w, int h) {
        long size = (long) w * h;
        int margin = w + h * 2;
        size += margin;
        return size;
    }

    public boolean same(String other, String current) {
        if (other == null || current == null) {
            return false;
        }
        return other.equals(current);
    }

    public int pick(int a, int right) {
        int result = a > right ? a : right;
        return result;
    }
}
